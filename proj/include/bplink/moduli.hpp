#pragma once

// Dimensions of weighted-homogeneous polynomial spaces (denumerant counts)
// and the resulting dimension of the Einstein moduli family.

#include <vector>

#include "bplink/errors.hpp"
#include "bplink/ke.hpp"

namespace bplink {

// Number of solutions in non-negative integers of sum e_i * w_i = degree.
// Dynamic programming over one weight at a time; table_cap bounds the
// table size (degree + 1 entries). Throws BudgetExceeded beyond the cap.
BigInt count_monomials(const std::vector<BigInt>& weights, const BigInt& degree,
                       const BigInt& table_cap = BigInt(100'000'000));

// complex_dim = dim H^0(P(w), C) - sum_i dim H^0(P(w), w_i), the number of
// weighted-degree-C perturbation monomials minus the coordinate changes;
// real_dim = 2 * complex_dim. The formula is a lower bound in general and
// exact precisely when the automorphism group is finite.
struct ModuliReport {
    BigInt dim_sections_d;
    std::vector<BigInt> dim_sections_wi;
    BigInt complex_dim;
    BigInt real_dim;
    bool exact = false;
    bool clamped = false;  // true when the raw difference was negative
};

enum class ModuliStrategy {
    Auto,     // closed form for the Sylvester-tail pattern, else DP
    ForceDP,  // always DP (for cross-checking the closed form)
};

ModuliReport moduli_dimension(const ExponentSequence& seq,
                              ModuliStrategy strategy = ModuliStrategy::Auto,
                              const BigInt& table_cap = BigInt(100'000'000));

}
