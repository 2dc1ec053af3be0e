#include "schroeder/trees.hpp"

#include <algorithm>

namespace schroeder {

// ---------------------------------------------------------------------------
// NodeAddress
// ---------------------------------------------------------------------------

std::string NodeAddress::str() const {
    if (steps_.empty()) return ".";
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(s == Step::Left ? 'L' : 'R');
    return out;
}

NodeAddress NodeAddress::parse(std::string_view text) {
    if (text == ".") return NodeAddress{};
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'L')
            steps.push_back(Step::Left);
        else if (text[i] == 'R')
            steps.push_back(Step::Right);
        else
            throw SyntaxError(i, "'L' or 'R'");
    }
    return NodeAddress(std::move(steps));
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

SchroederTree SchroederTree::node(std::vector<SchroederTree> children) {
    if (children.size() < 2) throw ArityError(0);
    int leaves = 0;
    for (const auto& c : children) leaves += c.leaf_count();
    SchroederTree t;
    t.node_ = std::make_shared<const Node>(Node{std::move(children), leaves});
    return t;
}

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    int leaves = left.leaf_count() + right.leaf_count();
    BinaryTree t;
    t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), leaves});
    return t;
}

WeightedTree WeightedTree::node(Weight w, WeightedTree left, WeightedTree right) {
    int leaves = left.leaf_count() + right.leaf_count();
    WeightedTree t;
    t.node_ = std::make_shared<const Node>(Node{w, std::move(left), std::move(right), leaves});
    return t;
}

// ---------------------------------------------------------------------------
// Structural equality (pointer shortcut first: subtrees are shared heavily)
// ---------------------------------------------------------------------------

bool operator==(const SchroederTree& a, const SchroederTree& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.node_->leaves != b.node_->leaves) return false;
    if (a.node_->children.size() != b.node_->children.size()) return false;
    return std::equal(a.node_->children.begin(), a.node_->children.end(),
                      b.node_->children.begin());
}

bool operator==(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    return a.node_->leaves == b.node_->leaves && a.node_->left == b.node_->left &&
           a.node_->right == b.node_->right;
}

bool operator==(const WeightedTree& a, const WeightedTree& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    return a.node_->weight == b.node_->weight && a.node_->leaves == b.node_->leaves &&
           a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

bool is_well_weighted(const WeightedTree& t) {
    if (t.is_leaf()) return true;
    if (t.weight() == Weight::Two && t.right().is_leaf()) return false;
    return is_well_weighted(t.left()) && is_well_weighted(t.right());
}

// ---------------------------------------------------------------------------
// Addressing
// ---------------------------------------------------------------------------

namespace {

template <class Tree>
Tree subtree_at_impl(const Tree& t, const NodeAddress& a) {
    Tree cur = t;
    for (Step s : a.steps()) {
        if (cur.is_leaf())
            throw AddressOutOfTree("address " + a.str() + " leaves the tree at a leaf");
        cur = (s == Step::Left) ? cur.left() : cur.right();
    }
    return cur;
}

BinaryTree rebuild(const BinaryTree& t, const std::vector<Step>& steps, std::size_t i,
                   const BinaryTree& r) {
    if (i == steps.size()) return r;
    if (t.is_leaf()) throw AddressOutOfTree("replacement address leaves the tree at a leaf");
    if (steps[i] == Step::Left)
        return BinaryTree::node(rebuild(t.left(), steps, i + 1, r), t.right());
    return BinaryTree::node(t.left(), rebuild(t.right(), steps, i + 1, r));
}

WeightedTree rebuild(const WeightedTree& t, const std::vector<Step>& steps, std::size_t i,
                     const WeightedTree& r) {
    if (i == steps.size()) return r;
    if (t.is_leaf()) throw AddressOutOfTree("replacement address leaves the tree at a leaf");
    if (steps[i] == Step::Left)
        return WeightedTree::node(t.weight(), rebuild(t.left(), steps, i + 1, r), t.right());
    return WeightedTree::node(t.weight(), t.left(), rebuild(t.right(), steps, i + 1, r));
}

template <class Tree>
void collect_addresses(const Tree& t, NodeFilter filter, std::vector<Step>& path,
                       std::vector<NodeAddress>& out) {
    bool keep = filter == NodeFilter::All || (filter == NodeFilter::LeavesOnly && t.is_leaf()) ||
                (filter == NodeFilter::InteriorOnly && !t.is_leaf());
    if (keep) out.emplace_back(path);
    if (t.is_leaf()) return;
    path.push_back(Step::Left);
    collect_addresses(t.left(), filter, path, out);
    path.back() = Step::Right;
    collect_addresses(t.right(), filter, path, out);
    path.pop_back();
}

}  // namespace

WeightedTree subtree_at(const WeightedTree& t, const NodeAddress& a) {
    return subtree_at_impl(t, a);
}
BinaryTree subtree_at(const BinaryTree& t, const NodeAddress& a) { return subtree_at_impl(t, a); }

WeightedTree replace_subtree(const WeightedTree& t, const NodeAddress& a, const WeightedTree& r) {
    return rebuild(t, a.steps(), 0, r);
}
BinaryTree replace_subtree(const BinaryTree& t, const NodeAddress& a, const BinaryTree& r) {
    return rebuild(t, a.steps(), 0, r);
}

std::vector<NodeAddress> list_addresses(const WeightedTree& t, NodeFilter filter) {
    std::vector<NodeAddress> out;
    std::vector<Step> path;
    collect_addresses(t, filter, path, out);
    return out;
}

std::vector<NodeAddress> list_addresses(const BinaryTree& t, NodeFilter filter) {
    std::vector<NodeAddress> out;
    std::vector<Step> path;
    collect_addresses(t, filter, path, out);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical order
// ---------------------------------------------------------------------------

std::strong_ordering canonical_compare(const SchroederTree& a, const SchroederTree& b) {
    if (auto c = a.leaf_count() <=> b.leaf_count(); c != 0) return c;
    if (a.is_leaf()) return std::strong_ordering::equal;  // equal counts: both leaves
    if (auto c = a.children().size() <=> b.children().size(); c != 0) return c;
    for (std::size_t i = 0; i < a.children().size(); ++i)
        if (auto c = canonical_compare(a.children()[i], b.children()[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::strong_ordering canonical_compare(const BinaryTree& a, const BinaryTree& b) {
    if (auto c = a.leaf_count() <=> b.leaf_count(); c != 0) return c;
    if (a.is_leaf()) return std::strong_ordering::equal;
    if (auto c = canonical_compare(a.left(), b.left()); c != 0) return c;
    return canonical_compare(a.right(), b.right());
}

std::strong_ordering canonical_compare(const WeightedTree& a, const WeightedTree& b) {
    if (auto c = a.leaf_count() <=> b.leaf_count(); c != 0) return c;
    if (a.is_leaf()) return std::strong_ordering::equal;
    if (auto c = canonical_compare(a.left(), b.left()); c != 0) return c;
    if (auto c = canonical_compare(a.right(), b.right()); c != 0) return c;
    return weight_value(a.weight()) <=> weight_value(b.weight());
}

// ---------------------------------------------------------------------------
// PointedTree
// ---------------------------------------------------------------------------

PointedTree::PointedTree(WeightedTree tree, NodeAddress point)
    : tree_(std::move(tree)), point_(std::move(point)) {
    if (!is_well_weighted(tree_))
        throw NotWellWeighted("pointed tree must be well-weighted");
    pointed_ = subtree_at(tree_, point_);
}

}  // namespace schroeder
