#include "schroeder/enumerate.hpp"

namespace schroeder {

// ---------------------------------------------------------------------------
// Well-weighted trees: for left size i = 1..n-1, for each (left, right)
// pair, weight 1 always and weight 2 only when the right part is not a leaf.
// ---------------------------------------------------------------------------

WellWeightedStream::WellWeightedStream(int n) : n_(n) {
    if (n < 1) throw Error("leaf count must be >= 1");
}

std::optional<WeightedTree> WellWeightedStream::next() {
    if (done_) return std::nullopt;
    if (n_ == 1) {
        done_ = true;
        return WeightedTree::leaf();
    }
    while (true) {
        if (left_ && right_) {
            if (weight_index_ == 0) {
                weight_index_ = 1;
                return WeightedTree::node(Weight::One, *left_, *right_);
            }
            if (weight_index_ == 1 && !right_->is_leaf()) {
                weight_index_ = 2;
                return WeightedTree::node(Weight::Two, *left_, *right_);
            }
            weight_index_ = 0;
            right_ = right_src_->next();
            if (right_) continue;
            left_ = left_src_->next();
            if (left_) {
                right_src_ = std::make_unique<WellWeightedStream>(n_ - left_size_);
                right_ = right_src_->next();
                continue;
            }
        }
        ++left_size_;
        if (left_size_ > n_ - 1) {
            done_ = true;
            return std::nullopt;
        }
        left_src_ = std::make_unique<WellWeightedStream>(left_size_);
        left_ = left_src_->next();
        right_src_ = std::make_unique<WellWeightedStream>(n_ - left_size_);
        right_ = right_src_->next();
        weight_index_ = 0;
    }
}

// ---------------------------------------------------------------------------
// Binary trees: same split scheme, no weights.
// ---------------------------------------------------------------------------

BinaryStream::BinaryStream(int n) : n_(n) {
    if (n < 1) throw Error("leaf count must be >= 1");
}

std::optional<BinaryTree> BinaryStream::next() {
    if (done_) return std::nullopt;
    if (n_ == 1) {
        done_ = true;
        return BinaryTree::leaf();
    }
    while (true) {
        if (left_ && right_src_) {
            if (auto right = right_src_->next()) return BinaryTree::node(*left_, *right);
            left_ = left_src_->next();
            if (left_) {
                right_src_ = std::make_unique<BinaryStream>(n_ - left_size_);
                continue;
            }
        }
        ++left_size_;
        if (left_size_ > n_ - 1) {
            done_ = true;
            return std::nullopt;
        }
        left_src_ = std::make_unique<BinaryStream>(left_size_);
        left_ = left_src_->next();
        right_src_ = std::make_unique<BinaryStream>(n_ - left_size_);
    }
}

// ---------------------------------------------------------------------------
// Schroeder trees: root arity l = 2..n ascending; child tuples in
// lexicographic order (size-composition major via the canonical order's
// leaf-count key, leftmost child most significant).
// ---------------------------------------------------------------------------

class SchroederStream::ForestStream {
public:
    ForestStream(int total, int k) : total_(total), k_(k) {
        if (k_ == 1) {
            single_ = std::make_unique<SchroederStream>(total_);
        }
    }

    std::optional<std::vector<SchroederTree>> next() {
        if (k_ == 1) {
            if (auto t = single_->next()) return std::vector<SchroederTree>{std::move(*t)};
            return std::nullopt;
        }
        while (true) {
            if (first_ && rest_) {
                if (auto tail = rest_->next()) {
                    std::vector<SchroederTree> out;
                    out.reserve(static_cast<std::size_t>(k_));
                    out.push_back(*first_);
                    out.insert(out.end(), tail->begin(), tail->end());
                    return out;
                }
                first_ = first_src_->next();
                if (first_) {
                    rest_ = std::make_unique<ForestStream>(total_ - first_size_, k_ - 1);
                    continue;
                }
            }
            ++first_size_;
            if (first_size_ > total_ - (k_ - 1)) return std::nullopt;
            first_src_ = std::make_unique<SchroederStream>(first_size_);
            first_ = first_src_->next();
            rest_ = std::make_unique<ForestStream>(total_ - first_size_, k_ - 1);
        }
    }

private:
    int total_, k_;
    std::unique_ptr<SchroederStream> single_;
    int first_size_ = 0;
    std::unique_ptr<SchroederStream> first_src_;
    std::optional<SchroederTree> first_;
    std::unique_ptr<ForestStream> rest_;
};

SchroederStream::SchroederStream(int n) : n_(n) {
    if (n < 1) throw Error("leaf count must be >= 1");
}

SchroederStream::~SchroederStream() = default;
SchroederStream::SchroederStream(SchroederStream&&) noexcept = default;
SchroederStream& SchroederStream::operator=(SchroederStream&&) noexcept = default;

std::optional<SchroederTree> SchroederStream::next() {
    if (done_) return std::nullopt;
    if (n_ == 1) {
        done_ = true;
        return SchroederTree::leaf();
    }
    while (true) {
        if (forest_) {
            if (auto children = forest_->next()) return SchroederTree::node(std::move(*children));
        }
        ++arity_;
        if (arity_ > n_) {
            done_ = true;
            return std::nullopt;
        }
        forest_ = std::make_unique<ForestStream>(n_, arity_);
    }
}

// ---------------------------------------------------------------------------
// Pointed trees
// ---------------------------------------------------------------------------

PointedStream::PointedStream(int n, NodeFilter mode) : trees_(n), mode_(mode) {}

std::optional<PointedTree> PointedStream::next() {
    while (true) {
        if (current_ && index_ < addresses_.size()) {
            return PointedTree(*current_, addresses_[index_++]);
        }
        current_ = trees_.next();
        if (!current_) return std::nullopt;
        addresses_ = list_addresses(*current_, mode_);
        index_ = 0;
    }
}

// ---------------------------------------------------------------------------
// Collectors
// ---------------------------------------------------------------------------

std::vector<WeightedTree> all_well_weighted(int n) {
    std::vector<WeightedTree> out;
    WellWeightedStream s(n);
    while (auto t = s.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<BinaryTree> all_binary(int n) {
    std::vector<BinaryTree> out;
    BinaryStream s(n);
    while (auto t = s.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<SchroederTree> all_schroeder(int n) {
    std::vector<SchroederTree> out;
    SchroederStream s(n);
    while (auto t = s.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<PointedTree> all_pointed(int n, NodeFilter mode) {
    std::vector<PointedTree> out;
    PointedStream s(n, mode);
    while (auto t = s.next()) out.push_back(std::move(*t));
    return out;
}

}  // namespace schroeder
