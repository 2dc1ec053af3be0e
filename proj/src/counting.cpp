#include "schroeder/counting.hpp"

namespace schroeder {

namespace {

// Exact quotient num / den; a nonzero remainder is a bug, not an input error.
BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw InexactDivision("division " + num.get_str() + " / " + den.get_str() +
                              " left remainder " + r.get_str());
    return q;
}

}  // namespace

CountTable schroeder_numbers_dp(int n_max) {
    if (n_max < 1) throw Error("n_max must be >= 1");
    std::vector<BigInt> w(static_cast<std::size_t>(n_max) + 1);
    w[1] = 1;
    BigInt conv, term;
    for (int n = 2; n <= n_max; ++n) {
        // symmetric convolution: sum_{i=1}^{n-1} w(i) w(n-i)
        conv = 0;
        for (int i = 1; 2 * i < n; ++i) {
            term = w[i] * w[n - i];
            conv += term;
        }
        conv *= 2;
        if (n % 2 == 0) {
            term = w[n / 2] * w[n / 2];
            conv += term;
        }
        w[n] = 2 * conv - w[n - 1];
    }
    CountTable t{SequenceKind::SchroederS, {}};
    t.values.assign(w.begin() + 1, w.end());
    return t;
}

CountTable schroeder_numbers_rec(int n_max) {
    if (n_max < 2) throw Error("n_max must be >= 2");
    std::vector<BigInt> s(static_cast<std::size_t>(n_max) + 1);
    s[1] = 1;
    s[2] = 1;
    for (int n = 2; n + 1 <= n_max; ++n) {
        BigInt num = 3 * (2 * n - 1) * s[n] - (n - 2) * s[n - 1];
        s[n + 1] = exact_div(num, n + 1);
    }
    CountTable t{SequenceKind::SchroederS, {}};
    t.values.assign(s.begin() + 1, s.end());
    return t;
}

BigInt catalan_closed_form(int n) {
    if (n < 1) throw Error("n must be >= 1");
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n) - 2,
                 static_cast<unsigned long>(n) - 1);
    return exact_div(b, n);
}

CountTable catalan_rec(int n_max) {
    if (n_max < 1) throw Error("n_max must be >= 1");
    std::vector<BigInt> c(static_cast<std::size_t>(n_max) + 1);
    c[1] = 1;
    for (int n = 1; n + 1 <= n_max; ++n) {
        BigInt num = 2 * (2 * n - 1) * c[n];
        c[n + 1] = exact_div(num, n + 1);
    }
    CountTable t{SequenceKind::CatalanC, {}};
    t.values.assign(c.begin() + 1, c.end());
    return t;
}

PointedCounts pointed_counts(int n) {
    if (n < 1) throw Error("n must be >= 1");
    BigInt s = schroeder_numbers_dp(n).at(n);
    return PointedCounts{(2 * n - 1) * s, n * s, (n - 1) * s};
}

RecurrenceReport verify_recurrence(Recurrence which, int n_max) {
    if (n_max < 2) throw Error("n_max must be >= 2");
    RecurrenceReport report{which, n_max, true, std::nullopt};
    if (which == Recurrence::One) {
        CountTable s = schroeder_numbers_dp(n_max + 1);
        for (int n = 2; n <= n_max; ++n) {
            BigInt lhs = 3 * (2 * n - 1) * s.at(n);
            BigInt rhs = (n + 1) * s.at(n + 1) + (n - 2) * s.at(n - 1);
            if (lhs != rhs) {
                report.all_hold = false;
                report.first_failure = n;
                break;
            }
        }
    } else {
        for (int n = 1; n <= n_max; ++n) {
            BigInt lhs = 2 * (2 * n - 1) * catalan_closed_form(n);
            BigInt rhs = (n + 1) * catalan_closed_form(n + 1);
            if (lhs != rhs) {
                report.all_hold = false;
                report.first_failure = n;
                break;
            }
        }
    }
    return report;
}

}  // namespace schroeder
