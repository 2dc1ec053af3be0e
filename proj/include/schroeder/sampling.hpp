#ifndef SCHROEDER_SAMPLING_HPP
#define SCHROEDER_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "schroeder/bijections.hpp"
#include "schroeder/trees.hpp"

namespace schroeder {

struct SamplerConfig {
    int target_n = 1;
    std::uint64_t seed = 0;
    // 0 means the default cap of 64 * target_n growth steps. The walk drifts
    // upward, so the cap only converts a broken sampler into a loud error.
    std::int64_t max_steps = 0;

    std::int64_t effective_max_steps() const {
        return max_steps > 0 ? max_steps : 64 * static_cast<std::int64_t>(target_n);
    }
};

// Grows a binary tree by one leaf: the subtree at `node` is replaced by an
// internal node whose `side` child is a new leaf and whose other child is
// the old subtree. A tree with m leaves admits 2(2m-1) distinct insertions.
BinaryTree remy_step(const BinaryTree& t, const NodeAddress& node, Step side);

// Exactly uniform over the c(target_n) binary trees: target_n - 1 steps with
// (node, side) drawn uniformly among the 2(2m-1) choices at each size m.
BinaryTree sample_binary_uniform(int target_n, std::mt19937_64& rng);
BinaryTree sample_binary_uniform(const SamplerConfig& cfg);

// Applies sigma at the given point and label, then forgets the point.
// Returns a tree with one leaf more (leaf-pointed image) or one leaf fewer
// (interior-pointed image). Throws TooSmall for a 1-leaf input.
WeightedTree sigma_walk_step(const WeightedTree& t, const NodeAddress& node, Label lab);

// Uniform over the s(target_n) well-weighted trees: a random walk that
// starts at the unique 1-leaf tree (the 1 -> 2 step is forced) and applies
// sigma_walk_step with uniformly drawn (node, label) until the size first
// hits target_n. Each step carries the uniform distribution at size m to the
// uniform distributions at sizes m+1 and m-1, and forgetting the point
// divides by a size-constant factor, so per-size uniformity is preserved.
// Throws StepBudgetExhausted past the step cap.
WeightedTree sample_well_weighted_uniform(int target_n, std::mt19937_64& rng,
                                          std::int64_t max_steps);
WeightedTree sample_well_weighted_uniform(const SamplerConfig& cfg);

// phi_inverse of the well-weighted sampler: uniform over Schroeder trees.
SchroederTree sample_schroeder_uniform(int target_n, std::mt19937_64& rng,
                                       std::int64_t max_steps);
SchroederTree sample_schroeder_uniform(const SamplerConfig& cfg);

enum class SampleKind { Binary, WellWeighted, Schroeder };

struct UniformityReport {
    int n = 0;
    std::size_t classes = 0;
    std::size_t draws = 0;
    double chi_square = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Upper 0.001 quantile of the chi-square distribution with `dof` degrees of
// freedom (e.g. 29.588 at 10 dof).
double chi_square_threshold(int dof);

// Draws samples, tallies them against the enumerated class list for (kind,
// n), and compares the Pearson statistic with the 0.001 quantile at
// (classes - 1) degrees of freedom. A sample outside the class list throws
// UnknownClass.
UniformityReport chi_square_uniformity(SampleKind kind, int n, std::size_t draws,
                                       std::uint64_t seed);

}  // namespace schroeder

#endif  // SCHROEDER_SAMPLING_HPP
