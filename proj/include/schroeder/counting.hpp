#ifndef SCHROEDER_COUNTING_HPP
#define SCHROEDER_COUNTING_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "schroeder/errors.hpp"

namespace schroeder {

using BigInt = mpz_class;

enum class SequenceKind { SchroederS, CatalanC };

// Sequence values indexed from n = 1.
struct CountTable {
    SequenceKind kind;
    std::vector<BigInt> values;

    int n_max() const { return static_cast<int>(values.size()); }
    const BigInt& at(int n) const { return values.at(static_cast<std::size_t>(n) - 1); }
};

// Independent oracle: counts well-weighted trees by leaf count via the
// convolution w(n) = 2*sum_{i=1}^{n-1} w(i)w(n-i) - w(n-1). The subtracted
// term removes the weight-2 splits whose right part is a single leaf.
CountTable schroeder_numbers_dp(int n_max);

// Propagates s(n+1) = (3(2n-1)s(n) - (n-2)s(n-1)) / (n+1) from s(1)=s(2)=1.
// Every division is asserted exact; a remainder throws InexactDivision.
CountTable schroeder_numbers_rec(int n_max);

// (1/n) * binom(2n-2, n-1), the number of binary plane trees with n leaves.
BigInt catalan_closed_form(int n);

// Propagates c(n+1) = 2(2n-1)c(n) / (n+1) from c(1)=1, divisions asserted
// exact.
CountTable catalan_rec(int n_max);

struct PointedCounts {
    BigInt pointed;           // (2n-1) s(n)
    BigInt leaf_pointed;      // n s(n)
    BigInt interior_pointed;  // (n-1) s(n)
};

PointedCounts pointed_counts(int n);

enum class Recurrence { One, Two };

struct RecurrenceReport {
    Recurrence which;
    int n_max;
    bool all_hold;
    std::optional<int> first_failure;
};

// Recurrence::One checks 3(2n-1)s(n) = (n+1)s(n+1) + (n-2)s(n-1) for
// 2 <= n <= n_max with both sides taken from the DP oracle. Recurrence::Two
// checks 2(2n-1)c(n) = (n+1)c(n+1) for 1 <= n <= n_max against the closed
// form. Failures are reported, not thrown.
RecurrenceReport verify_recurrence(Recurrence which, int n_max);

}  // namespace schroeder

#endif  // SCHROEDER_COUNTING_HPP
