#ifndef SCHROEDER_TEXT_HPP
#define SCHROEDER_TEXT_HPP

#include <string>
#include <string_view>

#include "schroeder/trees.hpp"

namespace schroeder {

// Text grammar (blanks = one or more spaces; canonical form uses single spaces):
//   leaf    := "*"
//   weight  := "1" | "2"
//   wtree   := leaf | "(" weight " " wtree " " wtree ")"
//   btree   := leaf | "(" btree " " btree ")"
//   stree   := leaf | "{" stree (" " stree)+ "}"
//   pointed := wtree with exactly one "'" appended to the pointed node's
//              leading token ("*'" or e.g. "(2' * (1 * *))")

SchroederTree parse_schroeder(std::string_view text);
BinaryTree parse_binary(std::string_view text);
WeightedTree parse_weighted(std::string_view text);
MarkedWeightedTree parse_weighted_pointed(std::string_view text);

std::string serialize(const SchroederTree& t);
std::string serialize(const BinaryTree& t);
std::string serialize(const WeightedTree& t);
std::string serialize_pointed(const WeightedTree& t, const NodeAddress& point);

inline std::string serialize(const PointedTree& p) {
    return serialize_pointed(p.tree(), p.point());
}
inline std::string serialize(const MarkedWeightedTree& m) {
    return serialize_pointed(m.tree, m.mark);
}

}  // namespace schroeder

#endif  // SCHROEDER_TEXT_HPP
