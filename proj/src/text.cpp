#include "schroeder/text.hpp"

#include <vector>

namespace schroeder {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_blanks() {
        while (!eof() && peek() == ' ') ++pos;
    }

    // At least one blank between sibling tokens.
    void expect_blank() {
        if (eof() || peek() != ' ') throw SyntaxError(pos, "' '");
        skip_blanks();
    }

    void expect(char c) {
        if (eof() || peek() != c) throw SyntaxError(pos, std::string("'") + c + "'");
        ++pos;
    }

    void expect_end() {
        skip_blanks();
        if (!eof()) throw SyntaxError(pos, "end of input");
    }
};

// Consumes a "'" marker if present and records the current path as marked.
struct MarkCollector {
    bool enabled = false;
    std::vector<NodeAddress> marks;

    void maybe_take(Cursor& c, const std::vector<Step>& path) {
        if (!c.eof() && c.peek() == '\'') {
            if (!enabled) throw SyntaxError(c.pos, "no point marker (kind is not pointed)");
            ++c.pos;
            marks.emplace_back(path);
        }
    }
};

SchroederTree parse_stree(Cursor& c) {
    if (c.eof()) throw SyntaxError(c.pos, "'*' or '{'");
    if (c.peek() == '*') {
        ++c.pos;
        return SchroederTree::leaf();
    }
    if (c.peek() != '{') throw SyntaxError(c.pos, "'*' or '{'");
    std::size_t open = c.pos;
    ++c.pos;
    std::vector<SchroederTree> children;
    children.push_back(parse_stree(c));
    while (true) {
        if (c.eof()) throw SyntaxError(c.pos, "' ' or '}'");
        if (c.peek() == '}') break;
        c.expect_blank();
        if (!c.eof() && c.peek() == '}') break;  // tolerate blanks before '}'
        children.push_back(parse_stree(c));
    }
    if (children.size() < 2) throw ArityError(open);
    c.expect('}');
    return SchroederTree::node(std::move(children));
}

BinaryTree parse_btree(Cursor& c) {
    if (c.eof()) throw SyntaxError(c.pos, "'*' or '('");
    if (c.peek() == '*') {
        ++c.pos;
        return BinaryTree::leaf();
    }
    if (c.peek() != '(') throw SyntaxError(c.pos, "'*' or '('");
    ++c.pos;
    BinaryTree left = parse_btree(c);
    c.expect_blank();
    BinaryTree right = parse_btree(c);
    c.skip_blanks();
    c.expect(')');
    return BinaryTree::node(std::move(left), std::move(right));
}

WeightedTree parse_wtree(Cursor& c, MarkCollector& marks, std::vector<Step>& path) {
    if (c.eof()) throw SyntaxError(c.pos, "'*' or '('");
    if (c.peek() == '*') {
        ++c.pos;
        marks.maybe_take(c, path);
        return WeightedTree::leaf();
    }
    if (c.peek() != '(') throw SyntaxError(c.pos, "'*' or '('");
    ++c.pos;
    if (c.eof() || (c.peek() != '1' && c.peek() != '2')) throw SyntaxError(c.pos, "'1' or '2'");
    Weight w = c.peek() == '1' ? Weight::One : Weight::Two;
    ++c.pos;
    marks.maybe_take(c, path);
    c.expect_blank();
    path.push_back(Step::Left);
    WeightedTree left = parse_wtree(c, marks, path);
    path.pop_back();
    c.expect_blank();
    path.push_back(Step::Right);
    WeightedTree right = parse_wtree(c, marks, path);
    path.pop_back();
    c.skip_blanks();
    c.expect(')');
    return WeightedTree::node(w, std::move(left), std::move(right));
}

}  // namespace

SchroederTree parse_schroeder(std::string_view text) {
    Cursor c{text};
    c.skip_blanks();
    SchroederTree t = parse_stree(c);
    c.expect_end();
    return t;
}

BinaryTree parse_binary(std::string_view text) {
    Cursor c{text};
    c.skip_blanks();
    BinaryTree t = parse_btree(c);
    c.expect_end();
    return t;
}

WeightedTree parse_weighted(std::string_view text) {
    Cursor c{text};
    c.skip_blanks();
    MarkCollector marks;  // disabled: a marker is a syntax error here
    std::vector<Step> path;
    WeightedTree t = parse_wtree(c, marks, path);
    c.expect_end();
    return t;
}

MarkedWeightedTree parse_weighted_pointed(std::string_view text) {
    Cursor c{text};
    c.skip_blanks();
    MarkCollector marks;
    marks.enabled = true;
    std::vector<Step> path;
    WeightedTree t = parse_wtree(c, marks, path);
    c.expect_end();
    if (marks.marks.size() != 1)
        throw PointError("expected exactly one point marker, found " +
                         std::to_string(marks.marks.size()));
    return MarkedWeightedTree{std::move(t), std::move(marks.marks.front())};
}

// ---------------------------------------------------------------------------
// Printing. parse(serialize(t)) == t for every tree.
// ---------------------------------------------------------------------------

namespace {

void write_stree(const SchroederTree& t, std::string& out) {
    if (t.is_leaf()) {
        out.push_back('*');
        return;
    }
    out.push_back('{');
    bool first = true;
    for (const auto& c : t.children()) {
        if (!first) out.push_back(' ');
        first = false;
        write_stree(c, out);
    }
    out.push_back('}');
}

void write_btree(const BinaryTree& t, std::string& out) {
    if (t.is_leaf()) {
        out.push_back('*');
        return;
    }
    out.push_back('(');
    write_btree(t.left(), out);
    out.push_back(' ');
    write_btree(t.right(), out);
    out.push_back(')');
}

// `remaining` is the path from this node down to the pointed node, or
// nullptr when the pointed node lies elsewhere.
void write_wtree(const WeightedTree& t, const std::vector<Step>* remaining, std::size_t depth,
                 std::string& out) {
    bool pointed_here = remaining && depth == remaining->size();
    if (t.is_leaf()) {
        if (remaining && depth < remaining->size())
            throw AddressOutOfTree("point address leaves the tree at a leaf");
        out.push_back('*');
        if (pointed_here) out.push_back('\'');
        return;
    }
    out.push_back('(');
    out.push_back(t.weight() == Weight::One ? '1' : '2');
    if (pointed_here) out.push_back('\'');
    out.push_back(' ');
    const std::vector<Step>* go_left = nullptr;
    const std::vector<Step>* go_right = nullptr;
    if (remaining && depth < remaining->size()) {
        ((*remaining)[depth] == Step::Left ? go_left : go_right) = remaining;
    }
    write_wtree(t.left(), go_left, depth + 1, out);
    out.push_back(' ');
    write_wtree(t.right(), go_right, depth + 1, out);
    out.push_back(')');
}

}  // namespace

std::string serialize(const SchroederTree& t) {
    std::string out;
    write_stree(t, out);
    return out;
}

std::string serialize(const BinaryTree& t) {
    std::string out;
    write_btree(t, out);
    return out;
}

std::string serialize(const WeightedTree& t) {
    std::string out;
    write_wtree(t, nullptr, 0, out);
    return out;
}

std::string serialize_pointed(const WeightedTree& t, const NodeAddress& point) {
    std::string out;
    write_wtree(t, &point.steps(), 0, out);
    return out;
}

}  // namespace schroeder
