#include "bplink/moduli.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bplink {

namespace {

using u64 = std::uint64_t;

// dp[d] = number of representations of d by the weights processed so far.
// Counts are monotone under adding weights, so a u64 overflow is detected
// on the fly and the computation restarts with big integers.
std::vector<u64> denumerant_table_u64(const std::vector<u64>& weights, u64 degree, bool& overflow) {
    std::vector<u64> dp(degree + 1, 0);
    dp[0] = 1;
    overflow = false;
    for (u64 w : weights) {
        for (u64 d = w; d <= degree; ++d) {
            if (__builtin_add_overflow(dp[d], dp[d - w], &dp[d])) {
                overflow = true;
                return dp;
            }
        }
    }
    return dp;
}

std::vector<BigInt> denumerant_table_big(const std::vector<u64>& weights, u64 degree) {
    std::vector<BigInt> dp(degree + 1);
    dp[0] = 1;
    for (u64 w : weights) {
        for (u64 d = w; d <= degree; ++d) dp[d] += dp[d - w];
    }
    return dp;
}

struct DenumerantQuery {
    std::vector<u64> weights;
    u64 degree = 0;
};

DenumerantQuery prepare_query(const std::vector<BigInt>& weights, const BigInt& degree,
                              const BigInt& table_cap) {
    if (weights.empty()) throw std::invalid_argument("count_monomials: weights must be non-empty");
    if (degree < 0) throw std::invalid_argument("count_monomials: degree must be non-negative");
    for (const BigInt& w : weights) {
        if (w < 1) throw std::invalid_argument("count_monomials: weights must be positive");
    }
    if (degree + 1 > table_cap || degree >= BigInt(std::numeric_limits<u64>::max())) {
        throw BudgetExceeded("count_monomials: degree exceeds the DP table cap");
    }
    DenumerantQuery q;
    q.degree = static_cast<u64>(degree);
    for (const BigInt& w : weights) {
        if (w <= degree) q.weights.push_back(static_cast<u64>(w));
    }
    return q;
}

BigInt table_lookup(const DenumerantQuery& q, u64 at) {
    bool overflow = false;
    std::vector<u64> dp = denumerant_table_u64(q.weights, q.degree, overflow);
    if (!overflow) return BigInt(dp[at]);
    return denumerant_table_big(q.weights, q.degree)[at];
}

// Matches (c_1, ..., c_{m-1}, (c_{m-1} - 2) c_{m-1}) for Sylvester numbers
// c_k. For these, the degree-C monomials are the m pure powers plus the
// two-variable combinations of the last two coordinates, which gives
// complex dimension c_{m-1} - 2 in closed form.
bool matches_sylvester_tail_pattern(const ExponentSequence& seq) {
    const std::size_t m = seq.m();
    if (m < 4) return false;
    BigInt c = 2;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (seq.a[i] != c) return false;
        if (i + 2 < m) c = c * c - c + 1;
    }
    return seq.a[m - 1] == (c - 2) * c;
}

ModuliReport sylvester_tail_report(const ExponentSequence& seq) {
    const std::size_t m = seq.m();
    const BigInt& c = seq.a[m - 2];  // c_{m-1}
    ModuliReport report;
    report.dim_sections_d = BigInt(m - 2) + c + 1;
    report.dim_sections_wi.assign(m, BigInt(1));
    report.dim_sections_wi[m - 2] = 2;  // the section z_{m-1} and z_m^{c-2}
    report.complex_dim = c - 2;
    report.real_dim = 2 * report.complex_dim;
    report.exact = has_finite_automorphisms(seq);
    report.clamped = false;
    return report;
}

}  // namespace

BigInt count_monomials(const std::vector<BigInt>& weights, const BigInt& degree,
                       const BigInt& table_cap) {
    DenumerantQuery q = prepare_query(weights, degree, table_cap);
    return table_lookup(q, q.degree);
}

ModuliReport moduli_dimension(const ExponentSequence& seq, ModuliStrategy strategy,
                              const BigInt& table_cap) {
    if (strategy == ModuliStrategy::Auto && matches_sylvester_tail_pattern(seq)) {
        return sylvester_tail_report(seq);
    }
    if (seq.C + 1 > table_cap || seq.C >= BigInt(std::numeric_limits<u64>::max())) {
        throw BudgetExceeded(
            "moduli_dimension: degree exceeds the DP table cap and the sequence matches no "
            "closed-form family");
    }

    const u64 degree = static_cast<u64>(seq.C);
    std::vector<u64> weights(seq.m());
    for (std::size_t i = 0; i < seq.m(); ++i) weights[i] = static_cast<u64>(seq.w[i]);

    ModuliReport report;
    bool overflow = false;
    std::vector<u64> dp = denumerant_table_u64(weights, degree, overflow);
    if (!overflow) {
        report.dim_sections_d = BigInt(dp[degree]);
        for (std::size_t i = 0; i < seq.m(); ++i) {
            report.dim_sections_wi.push_back(BigInt(dp[weights[i]]));
        }
    } else {
        std::vector<BigInt> big = denumerant_table_big(weights, degree);
        report.dim_sections_d = big[degree];
        for (std::size_t i = 0; i < seq.m(); ++i) {
            report.dim_sections_wi.push_back(big[weights[i]]);
        }
    }
    report.complex_dim = report.dim_sections_d;
    for (const BigInt& v : report.dim_sections_wi) report.complex_dim -= v;
    if (report.complex_dim < 0) {
        report.complex_dim = 0;
        report.clamped = true;
    }
    report.real_dim = 2 * report.complex_dim;
    report.exact = has_finite_automorphisms(seq);
    return report;
}

}
