#pragma once

// Signature of the Milnor fiber for links of dimension 4k-1 (odd sequence
// length), by three independent methods, and the conversion from signature
// to a diffeomorphism class in bP_4k.

#include <cstdint>

#include "bplink/errors.hpp"
#include "bplink/ke.hpp"

namespace bplink {

enum class SignatureMethod { BruteLattice, PolynomialDP, ZagierFloat };

// tau is the signed count of interior lattice points x (0 < x_i < a_i)
// whose fractional sum x_1/a_1 + ... + x_m/a_m lies in (0,1) mod 2, minus
// those in (1,2) mod 2; integer sums belong to neither set. For homotopy
// spheres tau is divisible by 8.
struct SignatureResult {
    BigInt tau;
    SignatureMethod method = SignatureMethod::BruteLattice;
    BigInt lattice_size;  // product of (a_i - 1)
    BigInt N;             // the common multiple used (lcm of the a_i)
};

// Direct lattice walk. Requires odd length and lattice_size <= budget;
// throws BudgetExceeded otherwise (use signature_dp then).
SignatureResult signature_brute(const ExponentSequence& seq,
                                const BigInt& budget = BigInt(100'000'000));

// Coefficient sweep over the generating function
//   prod_i (q^{w_i} + q^{2 w_i} + ... + q^{(a_i-1) w_i}),
// summing coefficients of q^s with sign +1 when floor(s/C) is even and -1
// when odd, skipping multiples of C. Exact; integer lanes are sized from
// lattice_size. Throws BudgetExceeded past the memory budget.
SignatureResult signature_dp(const ExponentSequence& seq,
                             std::uint64_t memory_budget_bytes = 2'000'000'000ull);

// Cotangent-sum evaluation
//   tau = (-1)^k / N * sum_j cot(pi(2j+1)/2N) prod_i cot(pi(2j+1)/2a_i)
// in floating point with a tracked error bound; the result is accepted only
// when the bound is below 1/2. Cross-check only. precision_bits <= 64 uses
// long double, anything above a 113-bit software float.
SignatureResult signature_zagier(const ExponentSequence& seq, unsigned precision_bits = 64,
                                 const BigInt& n_cap = BigInt(1'000'000));

// Diffeomorphism class of a homotopy (4k-1)-sphere with Milnor fiber
// signature tau: oriented class (tau/8) mod |bP_4k| with 0 the standard
// sphere, plus the orientation-ignoring representative min(c, |bP|-c).
// Requires tau divisible by 8 (throws std::domain_error otherwise).
struct BpClass {
    BigInt oriented;
    BigInt unoriented;
};

BpClass bp_class_of(const BigInt& tau, long link_dim);

}
