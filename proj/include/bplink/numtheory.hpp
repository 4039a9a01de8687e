#pragma once

// Exact integer and rational primitives: factorization, the gcd-with-lcm
// combination used for weight data, Bernoulli numbers, and the orders of
// the groups bP_n of homotopy spheres bounding parallelizable manifolds.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bplink {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct FactorPower {
    BigInt prime;
    unsigned exponent = 0;
    bool operator==(const FactorPower&) const = default;
};

// Prime powers sorted by strictly increasing prime; the product of
// prime^exponent equals the factored integer. Empty for 1.
struct Factorization {
    std::vector<FactorPower> factors;
    BigInt value() const;
    bool operator==(const Factorization&) const = default;
};

// Deterministic for n < 2^64; Miller-Rabin with many rounds above that.
bool is_probable_prime(const BigInt& n);

// n >= 1. Trial division below 10^6, then primality test plus Pollard rho.
// Throws std::runtime_error if a >20-digit composite resists splitting.
Factorization factorize(const BigInt& n);

// b_j = gcd(a_j, lcm of all a_i with i != j), without materializing the lcm:
// gcd distributes over lcm, so b_j = lcm over i != j of gcd(a_j, a_i), and
// every intermediate divides a_j. Throws std::out_of_range on a bad index.
BigInt gcd_with_lcm_of_others(const std::vector<BigInt>& a, std::size_t j);

// Classical Bernoulli number B_n (B_1 = -1/2), from the defining recurrence
// sum over k of C(n+1,k) B_k = 0. Cached; thread-safe.
Rational bernoulli_classical(unsigned n);

// The topologists' B_m = |classical B_{2m}|, the convention in which
// |bP_{4m}| = 2^{2m-2} (2^{2m-1} - 1) numerator(4 B_m / m).
Rational bernoulli_topologists(unsigned m);

// Order of bP_n for n = 4m, m >= 2. Throws std::invalid_argument otherwise.
BigInt bp_order(unsigned n);

enum class BpEvenStatus { Zero, Z2, Unknown };

// bP_n for n = 4m+2: trivial for m in {1,3,7,15}, open for the remaining
// m = 2^i - 1, and Z/2 otherwise. Throws std::invalid_argument on bad n.
BpEvenStatus bp_even_status(unsigned n);

// Sylvester's sequence c_1 = 2, c_{k+1} = c_k^2 - c_k + 1 (1-based).
BigInt sylvester_number(unsigned k);

}
