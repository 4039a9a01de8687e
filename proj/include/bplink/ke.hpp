#pragma once

// Exponent sequences with their derived weight data, and the exact-rational
// decision procedure for the Sasakian-Einstein existence inequality on the
// corresponding Brieskorn-Pham link.

#include <cstddef>
#include <utility>
#include <vector>

#include "bplink/numtheory.hpp"

namespace bplink {

// Canonical (sorted, non-decreasing) exponent sequence a_1 <= ... <= a_m,
// every entry >= 2, m >= 3, with the derived quantities:
//   C    = lcm(a_i), the weighted degree of the defining polynomial
//   w_i  = C / a_i, the weight of coordinate i
//   b_j  = gcd(a_j, lcm of the other entries); b_j divides a_j
//   d_j  = a_j / b_j
// The link of the singularity has dimension 2m - 3.
struct ExponentSequence {
    std::vector<BigInt> a;
    BigInt C;
    std::vector<BigInt> w;
    std::vector<BigInt> b;
    std::vector<BigInt> d;

    std::size_t m() const { return a.size(); }
    long link_dim() const { return 2 * static_cast<long>(a.size()) - 3; }
};

// Sorts, validates (length >= 3, entries >= 2), and computes the derived
// data. Permutations of one multiset give identical results.
ExponentSequence derive(std::vector<BigInt> raw);

// Whether the pair (i,j) in the min term ranges over all pairs or only i < j.
enum class PairMode { IncludeDiagonal, OffDiagonalOnly };

enum class MinTermKind { ReciprocalA, ReciprocalBB };

// Exact evaluation of both sides of the existence inequality
//   1 < sum 1/a_i < 1 + (m-1)/(m-2) * min{ 1/a_i, 1/(b_i b_j) }.
struct KECertificate {
    Rational fano_sum;
    Rational upper_bound;
    MinTermKind min_term_kind = MinTermKind::ReciprocalA;
    std::pair<std::size_t, std::size_t> min_term_indices{0, 0};
    PairMode pair_mode = PairMode::IncludeDiagonal;
    bool passes_fano = false;
    bool passes_upper = false;
    bool passes = false;
};

KECertificate check_ke(const ExponentSequence& seq, PairMode mode = PairMode::IncludeDiagonal);

// True iff 2/(m-1) * (sum w_i - C) < min w_i, the arithmetic form of the
// statement that the quotient orbifold carries no holomorphic contact
// structure. Requires m >= 4.
bool check_contact_exclusion(const ExponentSequence& seq);

// True iff m >= 4 and at most one entry equals 2; then the automorphism
// group of the singularity is finite and moduli counts are exact.
bool has_finite_automorphisms(const ExponentSequence& seq);

}
