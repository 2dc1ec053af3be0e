#ifndef SCHROEDER_TREES_HPP
#define SCHROEDER_TREES_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "schroeder/errors.hpp"

namespace schroeder {

// ---------------------------------------------------------------------------
// Weights and node addresses
// ---------------------------------------------------------------------------

enum class Weight : std::uint8_t { One = 1, Two = 2 };

constexpr int weight_value(Weight w) { return static_cast<int>(w); }

inline Weight weight_from(int v) {
    if (v != 1 && v != 2) throw Error("weight must be 1 or 2, got " + std::to_string(v));
    return static_cast<Weight>(v);
}

enum class Step : std::uint8_t { Left, Right };

// Root-relative path of left/right steps identifying one node of a binary
// tree. Paths survive tree reconstruction, unlike node identities.
class NodeAddress {
public:
    NodeAddress() = default;
    explicit NodeAddress(std::vector<Step> steps) : steps_(std::move(steps)) {}

    static NodeAddress root() { return NodeAddress{}; }

    bool is_root() const { return steps_.empty(); }
    std::size_t depth() const { return steps_.size(); }
    const std::vector<Step>& steps() const { return steps_; }

    Step last() const { return steps_.back(); }

    NodeAddress parent() const {
        std::vector<Step> s(steps_.begin(), steps_.end() - 1);
        return NodeAddress(std::move(s));
    }

    NodeAddress child(Step s) const {
        std::vector<Step> out = steps_;
        out.push_back(s);
        return NodeAddress(std::move(out));
    }

    // "." for the root, else one character per step, e.g. "LRL".
    std::string str() const;
    static NodeAddress parse(std::string_view text);

    friend bool operator==(const NodeAddress&, const NodeAddress&) = default;

private:
    std::vector<Step> steps_;
};

// ---------------------------------------------------------------------------
// Tree families. All three are immutable values with structural sharing;
// copies are cheap and every operation returns a new tree.
// ---------------------------------------------------------------------------

// Rooted plane tree whose internal nodes have at least two children.
class SchroederTree {
public:
    SchroederTree() = default;  // leaf

    static SchroederTree leaf() { return SchroederTree{}; }
    static SchroederTree node(std::vector<SchroederTree> children);

    bool is_leaf() const { return node_ == nullptr; }
    const std::vector<SchroederTree>& children() const;
    int leaf_count() const;

    friend bool operator==(const SchroederTree& a, const SchroederTree& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

// Rooted plane tree whose nodes have zero or exactly two children.
class BinaryTree {
public:
    BinaryTree() = default;  // leaf

    static BinaryTree leaf() { return BinaryTree{}; }
    static BinaryTree node(BinaryTree left, BinaryTree right);

    bool is_leaf() const { return node_ == nullptr; }
    const BinaryTree& left() const;
    const BinaryTree& right() const;
    int leaf_count() const;
    int node_count() const { return 2 * leaf_count() - 1; }

    friend bool operator==(const BinaryTree& a, const BinaryTree& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

// Binary plane tree whose interior nodes carry weight 1 or 2. The
// well-weighted predicate (weight-2 nodes have a non-leaf right son) is
// checked at API boundaries, not enforced by construction: sigma'
// deliberately produces non-well-weighted intermediates.
class WeightedTree {
public:
    WeightedTree() = default;  // leaf

    static WeightedTree leaf() { return WeightedTree{}; }
    static WeightedTree node(Weight w, WeightedTree left, WeightedTree right);

    bool is_leaf() const { return node_ == nullptr; }
    Weight weight() const;
    const WeightedTree& left() const;
    const WeightedTree& right() const;
    int leaf_count() const;
    int node_count() const { return 2 * leaf_count() - 1; }

    friend bool operator==(const WeightedTree& a, const WeightedTree& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct SchroederTree::Node {
    std::vector<SchroederTree> children;
    int leaves;
};

struct BinaryTree::Node {
    BinaryTree left, right;
    int leaves;
};

struct WeightedTree::Node {
    Weight weight;
    WeightedTree left, right;
    int leaves;
};

inline const std::vector<SchroederTree>& SchroederTree::children() const {
    return node_->children;
}
inline int SchroederTree::leaf_count() const { return node_ ? node_->leaves : 1; }

inline const BinaryTree& BinaryTree::left() const { return node_->left; }
inline const BinaryTree& BinaryTree::right() const { return node_->right; }
inline int BinaryTree::leaf_count() const { return node_ ? node_->leaves : 1; }

inline Weight WeightedTree::weight() const { return node_->weight; }
inline const WeightedTree& WeightedTree::left() const { return node_->left; }
inline const WeightedTree& WeightedTree::right() const { return node_->right; }
inline int WeightedTree::leaf_count() const { return node_ ? node_->leaves : 1; }

bool is_well_weighted(const WeightedTree& t);

// ---------------------------------------------------------------------------
// Addressing
// ---------------------------------------------------------------------------

enum class NodeFilter { All, LeavesOnly, InteriorOnly };

WeightedTree subtree_at(const WeightedTree& t, const NodeAddress& a);
BinaryTree subtree_at(const BinaryTree& t, const NodeAddress& a);

WeightedTree replace_subtree(const WeightedTree& t, const NodeAddress& a, const WeightedTree& r);
BinaryTree replace_subtree(const BinaryTree& t, const NodeAddress& a, const BinaryTree& r);

// Preorder (node, left, right). A tree with n leaves yields 2n-1 / n / n-1
// addresses for All / LeavesOnly / InteriorOnly.
std::vector<NodeAddress> list_addresses(const WeightedTree& t, NodeFilter filter);
std::vector<NodeAddress> list_addresses(const BinaryTree& t, NodeFilter filter);

// ---------------------------------------------------------------------------
// Canonical total order. Leaf count is the primary key; within equal leaf
// counts, weighted and binary nodes compare by (left, right, weight) and
// Schroeder nodes by (child count, children) lexicographically. Enumeration
// emits in strictly ascending canonical order.
// ---------------------------------------------------------------------------

std::strong_ordering canonical_compare(const SchroederTree& a, const SchroederTree& b);
std::strong_ordering canonical_compare(const BinaryTree& a, const BinaryTree& b);
std::strong_ordering canonical_compare(const WeightedTree& a, const WeightedTree& b);

inline std::strong_ordering operator<=>(const SchroederTree& a, const SchroederTree& b) {
    return canonical_compare(a, b);
}
inline std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) {
    return canonical_compare(a, b);
}
inline std::strong_ordering operator<=>(const WeightedTree& a, const WeightedTree& b) {
    return canonical_compare(a, b);
}

// ---------------------------------------------------------------------------
// Pointed trees
// ---------------------------------------------------------------------------

// A weighted tree plus a node mark, with no validity requirements. Used for
// sigma' outputs and freshly parsed pointed text.
struct MarkedWeightedTree {
    WeightedTree tree;
    NodeAddress mark;

    friend bool operator==(const MarkedWeightedTree&, const MarkedWeightedTree&) = default;
};

// A well-weighted tree with one distinguished node. Construction validates
// both the well-weighted predicate and the address.
class PointedTree {
public:
    PointedTree(WeightedTree tree, NodeAddress point);

    const WeightedTree& tree() const { return tree_; }
    const NodeAddress& point() const { return point_; }
    const WeightedTree& pointed_subtree() const { return pointed_; }
    bool points_to_leaf() const { return pointed_.is_leaf(); }
    int leaf_count() const { return tree_.leaf_count(); }

    friend bool operator==(const PointedTree& a, const PointedTree& b) {
        return a.point_ == b.point_ && a.tree_ == b.tree_;
    }

private:
    WeightedTree tree_;
    NodeAddress point_;
    WeightedTree pointed_;
};

}  // namespace schroeder

#endif  // SCHROEDER_TREES_HPP
