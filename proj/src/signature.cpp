#include "bplink/signature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace bplink {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void require_odd_length(const ExponentSequence& seq) {
    if (seq.m() % 2 == 0) {
        throw std::invalid_argument(
            "signature: defined only for odd sequence length (link dimension 4k-1)");
    }
}

BigInt lattice_size_of(const ExponentSequence& seq) {
    BigInt p = 1;
    for (const BigInt& v : seq.a) p *= v - 1;
    return p;
}

// Streamed coefficient sweep. Multiplying the running polynomial by
// q^w + ... + q^{(a-1)w} obeys, with aw = C and out-of-range terms zero,
//   new[s] = new[s-w] + old[s-w] - old[s-C].
// Unsigned wraparound is exact because every true coefficient is a count
// bounded by the lattice size, which fits the lane type.
template <class Lane>
BigInt dp_sweep(const std::vector<u64>& a, const std::vector<u64>& w, u64 C, u64 s_max) {
    std::vector<Lane> oldv(s_max + 1, Lane(0)), newv(s_max + 1, Lane(0));
    oldv[0] = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const u64 wi = w[i];
        std::fill(newv.begin(), newv.end(), Lane(0));
        for (u64 s = wi; s <= s_max; ++s) {
            Lane v = newv[s - wi] + oldv[s - wi];
            if (s >= C) v -= oldv[s - C];
            newv[s] = v;
        }
        oldv.swap(newv);
    }
    BigInt plus = 0, minus = 0;
    for (u64 s = 1; s <= s_max; ++s) {
        if (s % C == 0) continue;
        if ((s / C) % 2 == 0) plus += BigInt(oldv[s]);
        else minus += BigInt(oldv[s]);
    }
    return plus - minus;
}

template <>
BigInt dp_sweep<BigInt>(const std::vector<u64>& a, const std::vector<u64>& w, u64 C, u64 s_max) {
    std::vector<BigInt> oldv(s_max + 1), newv(s_max + 1);
    oldv[0] = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const u64 wi = w[i];
        std::fill(newv.begin(), newv.end(), BigInt(0));
        for (u64 s = wi; s <= s_max; ++s) {
            BigInt v = newv[s - wi] + oldv[s - wi];
            if (s >= C) v -= oldv[s - C];
            newv[s] = std::move(v);
        }
        oldv.swap(newv);
    }
    BigInt plus = 0, minus = 0;
    for (u64 s = 1; s <= s_max; ++s) {
        if (s % C == 0) continue;
        if ((s / C) % 2 == 0) plus += oldv[s];
        else minus += oldv[s];
    }
    return plus - minus;
}

template <class Real>
BigInt zagier_sum(const std::vector<u64>& a, u64 N, int k) {
    const Real pi = boost::math::constants::pi<Real>();
    Real half_pi_over_N = pi / (2 * Real(N));
    Real sum = 0, abs_sum = 0;
    std::vector<Real> half_pi_over_a(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) half_pi_over_a[i] = pi / (2 * Real(a[i]));
    for (u64 j = 0; j < N; ++j) {
        Real odd = Real(2 * j + 1);
        Real term = cos(odd * half_pi_over_N) / sin(odd * half_pi_over_N);
        for (std::size_t i = 0; i < a.size(); ++i) {
            // 2j+1 is odd and 2a_i is even, so the argument never hits a pole.
            Real t = fmod(odd, Real(2 * a[i])) * half_pi_over_a[i];
            term *= cos(t) / sin(t);
        }
        sum += term;
        abs_sum += fabs(term);
    }
    if (k % 2 != 0) sum = -sum;
    Real value = sum / Real(N);
    Real eps = std::numeric_limits<Real>::epsilon();
    // Each term costs O(m) floating ops, each with relative error ~eps, so
    // the absolute error is conservatively (4m+16) * eps * sum|term| / N.
    Real err = Real(4 * a.size() + 16) * eps * abs_sum / Real(N);
    Real rounded = round(value);
    if (err >= Real(0.5) || fabs(value - rounded) + err >= Real(0.5)) {
        throw PrecisionInsufficient("signature_zagier: error bound too large to round");
    }
    return BigInt(static_cast<long long>(rounded));
}

}  // namespace

SignatureResult signature_brute(const ExponentSequence& seq, const BigInt& budget) {
    require_odd_length(seq);
    SignatureResult result;
    result.method = SignatureMethod::BruteLattice;
    result.lattice_size = lattice_size_of(seq);
    result.N = seq.C;
    if (result.lattice_size > budget) {
        throw BudgetExceeded("signature_brute: lattice size exceeds budget; use signature_dp");
    }
    const std::size_t m = seq.m();
    if (seq.C > std::numeric_limits<u64>::max() / (2 * m)) {
        throw BudgetExceeded("signature_brute: exponent sums exceed 64-bit range");
    }
    std::vector<u64> a(m), w(m), x(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        a[i] = static_cast<u64>(seq.a[i]);
        w[i] = static_cast<u64>(seq.w[i]);
    }
    const u64 C = static_cast<u64>(seq.C);
    u64 s = 0;
    for (std::size_t i = 0; i < m; ++i) s += w[i];
    u64 plus = 0, minus = 0;
    for (;;) {
        if (s % C != 0) {
            if ((s / C) % 2 == 0) ++plus;
            else ++minus;
        }
        std::size_t i = 0;
        while (i < m) {
            if (x[i] + 1 < a[i]) {
                ++x[i];
                s += w[i];
                break;
            }
            s -= (x[i] - 1) * w[i];
            x[i] = 1;
            ++i;
        }
        if (i == m) break;
    }
    result.tau = BigInt(plus) - BigInt(minus);
    return result;
}

SignatureResult signature_dp(const ExponentSequence& seq, std::uint64_t memory_budget_bytes) {
    require_odd_length(seq);
    SignatureResult result;
    result.method = SignatureMethod::PolynomialDP;
    result.lattice_size = lattice_size_of(seq);
    result.N = seq.C;

    const std::size_t m = seq.m();
    BigInt s_max_big = 0;
    for (std::size_t i = 0; i < m; ++i) s_max_big += (seq.a[i] - 1) * seq.w[i];
    std::size_t lane_bytes;
    if (result.lattice_size < (BigInt(1) << 31)) lane_bytes = 4;
    else if (result.lattice_size < (BigInt(1) << 63)) lane_bytes = 8;
    else if (result.lattice_size < (BigInt(1) << 127)) lane_bytes = 16;
    else lane_bytes = 40;  // rough per-entry estimate for small big integers
    if (2 * (s_max_big + 1) * lane_bytes > memory_budget_bytes) {
        throw BudgetExceeded("signature_dp: coefficient arrays exceed memory budget");
    }

    std::vector<u64> a(m), w(m);
    for (std::size_t i = 0; i < m; ++i) {
        a[i] = static_cast<u64>(seq.a[i]);
        w[i] = static_cast<u64>(seq.w[i]);
    }
    const u64 C = static_cast<u64>(seq.C);
    const u64 s_max = static_cast<u64>(s_max_big);
    if (lane_bytes == 4) result.tau = dp_sweep<std::uint32_t>(a, w, C, s_max);
    else if (lane_bytes == 8) result.tau = dp_sweep<u64>(a, w, C, s_max);
    else if (lane_bytes == 16) result.tau = dp_sweep<u128>(a, w, C, s_max);
    else result.tau = dp_sweep<BigInt>(a, w, C, s_max);
    return result;
}

SignatureResult signature_zagier(const ExponentSequence& seq, unsigned precision_bits,
                                 const BigInt& n_cap) {
    require_odd_length(seq);
    if (seq.C > n_cap) {
        throw BudgetExceeded("signature_zagier: lcm exceeds the configured cap");
    }
    SignatureResult result;
    result.method = SignatureMethod::ZagierFloat;
    result.lattice_size = lattice_size_of(seq);
    result.N = seq.C;

    const std::size_t m = seq.m();
    std::vector<u64> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = static_cast<u64>(seq.a[i]);
    const u64 N = static_cast<u64>(seq.C);
    const int k = static_cast<int>((m - 1) / 2);
    if (precision_bits <= 64) {
        result.tau = zagier_sum<long double>(a, N, k);
    } else {
        result.tau = zagier_sum<boost::multiprecision::cpp_bin_float_quad>(a, N, k);
    }
    return result;
}

BpClass bp_class_of(const BigInt& tau, long link_dim) {
    if (link_dim % 4 != 3 || link_dim < 7) {
        throw std::invalid_argument("bp_class_of: link dimension must be 4k-1 with k >= 2");
    }
    if (tau % 8 != 0) {
        throw std::domain_error("bp_class_of: tau not divisible by 8; the link is not a homotopy sphere");
    }
    BigInt order = bp_order(static_cast<unsigned>(link_dim + 1));
    BigInt c = (tau / 8) % order;
    if (c < 0) c += order;
    BigInt mirror = order - c;
    return {c, c < mirror ? c : mirror};
}

}
