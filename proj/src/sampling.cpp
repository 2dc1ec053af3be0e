#include "schroeder/sampling.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <string>
#include <unordered_map>
#include <vector>

#include "schroeder/enumerate.hpp"
#include "schroeder/text.hpp"

namespace schroeder {

BinaryTree remy_step(const BinaryTree& t, const NodeAddress& node, Step side) {
    BinaryTree s = subtree_at(t, node);
    BinaryTree grown = side == Step::Left ? BinaryTree::node(BinaryTree::leaf(), s)
                                          : BinaryTree::node(s, BinaryTree::leaf());
    return replace_subtree(t, node, grown);
}

namespace {

std::size_t draw_index(std::mt19937_64& rng, std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace

BinaryTree sample_binary_uniform(int target_n, std::mt19937_64& rng) {
    if (target_n < 1) throw Error("target_n must be >= 1");
    BinaryTree t = BinaryTree::leaf();
    for (int m = 1; m < target_n; ++m) {
        std::vector<NodeAddress> nodes = list_addresses(t, NodeFilter::All);
        // one draw over the 2(2m-1) (node, side) choices
        std::size_t pick = draw_index(rng, 2 * nodes.size());
        Step side = pick % 2 == 0 ? Step::Left : Step::Right;
        t = remy_step(t, nodes[pick / 2], side);
    }
    return t;
}

BinaryTree sample_binary_uniform(const SamplerConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    return sample_binary_uniform(cfg.target_n, rng);
}

WeightedTree sigma_walk_step(const WeightedTree& t, const NodeAddress& node, Label lab) {
    return sigma(lab, PointedTree(t, node)).pointed().tree();
}

WeightedTree sample_well_weighted_uniform(int target_n, std::mt19937_64& rng,
                                          std::int64_t max_steps) {
    if (target_n < 1) throw Error("target_n must be >= 1");
    WeightedTree t = WeightedTree::leaf();
    if (target_n == 1) return t;
    // forced: the unique 2-leaf tree
    t = WeightedTree::node(Weight::One, WeightedTree::leaf(), WeightedTree::leaf());
    static constexpr Label kLabels[3] = {Label::L1, Label::L2, Label::R1};
    std::int64_t steps = 0;
    while (t.leaf_count() != target_n) {
        if (++steps > max_steps)
            throw StepBudgetExhausted("sigma walk exceeded " + std::to_string(max_steps) +
                                      " steps before reaching " + std::to_string(target_n) +
                                      " leaves");
        std::vector<NodeAddress> nodes = list_addresses(t, NodeFilter::All);
        const NodeAddress& node = nodes[draw_index(rng, nodes.size())];
        Label lab = kLabels[draw_index(rng, 3)];
        t = sigma_walk_step(t, node, lab);
    }
    return t;
}

WeightedTree sample_well_weighted_uniform(const SamplerConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    return sample_well_weighted_uniform(cfg.target_n, rng, cfg.effective_max_steps());
}

SchroederTree sample_schroeder_uniform(int target_n, std::mt19937_64& rng,
                                       std::int64_t max_steps) {
    return phi_inverse(sample_well_weighted_uniform(target_n, rng, max_steps));
}

SchroederTree sample_schroeder_uniform(const SamplerConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    return sample_schroeder_uniform(cfg.target_n, rng, cfg.effective_max_steps());
}

// ---------------------------------------------------------------------------
// Uniformity harness
// ---------------------------------------------------------------------------

double chi_square_threshold(int dof) {
    boost::math::chi_squared dist(dof);
    return boost::math::quantile(boost::math::complement(dist, 0.001));
}

UniformityReport chi_square_uniformity(SampleKind kind, int n, std::size_t draws,
                                       std::uint64_t seed) {
    std::unordered_map<std::string, std::size_t> index;
    switch (kind) {
        case SampleKind::Binary:
            for (const auto& t : all_binary(n)) index.emplace(serialize(t), index.size());
            break;
        case SampleKind::WellWeighted:
            for (const auto& t : all_well_weighted(n)) index.emplace(serialize(t), index.size());
            break;
        case SampleKind::Schroeder:
            for (const auto& t : all_schroeder(n)) index.emplace(serialize(t), index.size());
            break;
    }

    std::vector<std::size_t> tally(index.size(), 0);
    std::mt19937_64 rng(seed);
    const std::int64_t max_steps = SamplerConfig{n, seed, 0}.effective_max_steps();
    for (std::size_t i = 0; i < draws; ++i) {
        std::string key;
        switch (kind) {
            case SampleKind::Binary: key = serialize(sample_binary_uniform(n, rng)); break;
            case SampleKind::WellWeighted:
                key = serialize(sample_well_weighted_uniform(n, rng, max_steps));
                break;
            case SampleKind::Schroeder:
                key = serialize(sample_schroeder_uniform(n, rng, max_steps));
                break;
        }
        auto it = index.find(key);
        if (it == index.end()) throw UnknownClass("sampled tree not in enumerated classes: " + key);
        ++tally[it->second];
    }

    UniformityReport report;
    report.n = n;
    report.classes = index.size();
    report.draws = draws;
    const double expected = static_cast<double>(draws) / static_cast<double>(index.size());
    double chi = 0.0;
    for (std::size_t observed : tally) {
        const double d = static_cast<double>(observed) - expected;
        chi += d * d / expected;
    }
    report.chi_square = chi;
    if (index.size() > 1) {
        report.threshold = chi_square_threshold(static_cast<int>(index.size()) - 1);
        report.pass = chi <= report.threshold;
    } else {
        report.threshold = 0.0;
        report.pass = true;  // one class: the statistic is identically zero
    }
    return report;
}

}  // namespace schroeder
