#ifndef SCHROEDER_ENUMERATE_HPP
#define SCHROEDER_ENUMERATE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "schroeder/trees.hpp"

namespace schroeder {

// Exhaustive, duplicate-free generators over the trees with exactly n
// leaves, emitting in strictly ascending canonical order. Generation is
// lazy: a stream holds one frame per recursion level, never a full list.
// Streams are single-consumer; distinct streams are independent.

class WellWeightedStream {
public:
    explicit WellWeightedStream(int n);
    std::optional<WeightedTree> next();

private:
    int n_;
    bool done_ = false;
    int left_size_ = 0;
    std::unique_ptr<WellWeightedStream> left_src_, right_src_;
    std::optional<WeightedTree> left_, right_;
    int weight_index_ = 0;
};

class BinaryStream {
public:
    explicit BinaryStream(int n);
    std::optional<BinaryTree> next();

private:
    int n_;
    bool done_ = false;
    int left_size_ = 0;
    std::unique_ptr<BinaryStream> left_src_, right_src_;
    std::optional<BinaryTree> left_;
};

class SchroederStream {
public:
    explicit SchroederStream(int n);
    ~SchroederStream();
    SchroederStream(SchroederStream&&) noexcept;
    SchroederStream& operator=(SchroederStream&&) noexcept;

    std::optional<SchroederTree> next();

private:
    class ForestStream;  // tuples of k trees with a prescribed total leaf count

    int n_;
    bool done_ = false;
    int arity_ = 1;
    std::unique_ptr<ForestStream> forest_;
};

// Pointed variants of the well-weighted trees: tree-major (canonical order),
// preorder-address-minor. NodeFilter::All yields (2n-1)s(n) elements,
// LeavesOnly n*s(n), InteriorOnly (n-1)*s(n).
class PointedStream {
public:
    PointedStream(int n, NodeFilter mode);
    std::optional<PointedTree> next();

private:
    WellWeightedStream trees_;
    NodeFilter mode_;
    std::optional<WeightedTree> current_;
    std::vector<NodeAddress> addresses_;
    std::size_t index_ = 0;
};

std::vector<WeightedTree> all_well_weighted(int n);
std::vector<BinaryTree> all_binary(int n);
std::vector<SchroederTree> all_schroeder(int n);
std::vector<PointedTree> all_pointed(int n, NodeFilter mode);

}  // namespace schroeder

#endif  // SCHROEDER_ENUMERATE_HPP
