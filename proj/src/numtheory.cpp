#include "bplink/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace bplink {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128)a * b % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for all n < 2^64 with the standard 12-prime base set.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's cycle variant of Pollard rho. n must be odd composite, not a prime power guard needed.
u64 pollard_rho_u64(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [n, c](u64 x) { return (mulmod_u64(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) { x = y; power *= 2; lam = 0; }
            y = f(y);
            ++lam;
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_u64_into(u64 n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out[BigInt(n)]++; return; }
    u64 d = pollard_rho_u64(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

// Pollard rho over BigInt with an iteration cap, for inputs past 64 bits.
BigInt pollard_rho_big(const BigInt& n, std::uint64_t max_iters) {
    for (unsigned attempt = 0; attempt < 16; ++attempt) {
        BigInt c = 1 + attempt;
        BigInt x = 2 + attempt, y = x, d = 1;
        std::uint64_t iters = 0;
        while (d == 1) {
            if (++iters > max_iters) return 0;
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = boost::integer::gcd(BigInt(abs(x - y)), n);
        }
        if (d != n) return d;
    }
    return 0;
}

void factor_big_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (n <= std::numeric_limits<u64>::max()) {
        factor_u64_into(static_cast<u64>(n), out);
        return;
    }
    if (boost::multiprecision::miller_rabin_test(n, 40)) { out[n]++; return; }
    BigInt d = pollard_rho_big(n, 50'000'000);
    if (d == 0 || d == n) {
        throw std::runtime_error("factorize: could not split a large composite factor");
    }
    factor_big_into(d, out);
    factor_big_into(n / d, out);
}

}  // namespace

BigInt Factorization::value() const {
    BigInt v = 1;
    for (const auto& fp : factors) {
        for (unsigned e = 0; e < fp.exponent; ++e) v *= fp.prime;
    }
    return v;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<u64>::max()) return is_prime_u64(static_cast<u64>(n));
    return boost::multiprecision::miller_rabin_test(n, 40);
}

Factorization factorize(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("factorize: input must be >= 1");
    std::map<BigInt, unsigned> acc;
    BigInt rest = n;
    for (u64 p = 2; p <= 1'000'000 && BigInt(p) * p <= rest; p = (p == 2 ? 3 : p + 2)) {
        while (rest % p == 0) {
            acc[BigInt(p)]++;
            rest /= p;
        }
    }
    if (rest > 1) factor_big_into(rest, acc);
    Factorization f;
    for (const auto& [prime, exp] : acc) f.factors.push_back({prime, exp});
    return f;
}

BigInt gcd_with_lcm_of_others(const std::vector<BigInt>& a, std::size_t j) {
    if (j >= a.size()) throw std::out_of_range("gcd_with_lcm_of_others: index out of range");
    BigInt b = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == j) continue;
        b = boost::integer::lcm(b, boost::integer::gcd(a[j], a[i]));
    }
    return b;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache;  // index n -> classical B_n

void extend_bernoulli_cache(unsigned n) {
    if (bernoulli_cache.empty()) {
        bernoulli_cache.push_back(Rational(1));
        bernoulli_cache.push_back(Rational(-1, 2));
    }
    while (bernoulli_cache.size() <= n) {
        unsigned k = static_cast<unsigned>(bernoulli_cache.size());
        // B_k = -1/(k+1) * sum_{i<k} C(k+1, i) B_i
        Rational sum = 0;
        BigInt binom = 1;  // C(k+1, i), updated incrementally
        for (unsigned i = 0; i < k; ++i) {
            sum += Rational(binom) * bernoulli_cache[i];
            binom = binom * (k + 1 - i) / (i + 1);
        }
        bernoulli_cache.push_back(-sum / Rational(k + 1));
    }
}

}  // namespace

Rational bernoulli_classical(unsigned n) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    extend_bernoulli_cache(n);
    return bernoulli_cache[n];
}

Rational bernoulli_topologists(unsigned m) {
    if (m < 1) throw std::invalid_argument("bernoulli_topologists: m must be >= 1");
    return abs(bernoulli_classical(2 * m));
}

BigInt bp_order(unsigned n) {
    if (n % 4 != 0 || n < 8) throw std::invalid_argument("bp_order: n must be 4m with m >= 2");
    unsigned m = n / 4;
    Rational r = 4 * bernoulli_topologists(m) / m;
    BigInt pow22 = BigInt(1) << (2 * m - 2);
    return pow22 * ((BigInt(1) << (2 * m - 1)) - 1) * boost::multiprecision::numerator(r);
}

BpEvenStatus bp_even_status(unsigned n) {
    if (n % 4 != 2 || n < 6) throw std::invalid_argument("bp_even_status: n must be 4m+2 with m >= 1");
    unsigned m = (n - 2) / 4;
    if (m == 1 || m == 3 || m == 7 || m == 15) return BpEvenStatus::Zero;
    if ((m & (m + 1)) == 0) return BpEvenStatus::Unknown;  // m = 2^i - 1, i >= 5
    return BpEvenStatus::Z2;
}

BigInt sylvester_number(unsigned k) {
    if (k < 1) throw std::invalid_argument("sylvester_number: k must be >= 1");
    BigInt c = 2;
    for (unsigned i = 1; i < k; ++i) c = c * c - c + 1;
    return c;
}

}
