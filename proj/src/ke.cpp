#include "bplink/ke.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace bplink {

ExponentSequence derive(std::vector<BigInt> raw) {
    if (raw.size() < 3) throw std::invalid_argument("derive: need at least 3 exponents");
    for (const BigInt& v : raw) {
        if (v < 2) throw std::invalid_argument("derive: every exponent must be >= 2");
    }
    std::sort(raw.begin(), raw.end());

    ExponentSequence seq;
    seq.a = std::move(raw);
    seq.C = 1;
    for (const BigInt& v : seq.a) seq.C = boost::integer::lcm(seq.C, v);
    seq.w.reserve(seq.a.size());
    seq.b.reserve(seq.a.size());
    seq.d.reserve(seq.a.size());
    for (std::size_t i = 0; i < seq.a.size(); ++i) {
        seq.w.push_back(seq.C / seq.a[i]);
        seq.b.push_back(gcd_with_lcm_of_others(seq.a, i));
        seq.d.push_back(seq.a[i] / seq.b[i]);
    }
    return seq;
}

KECertificate check_ke(const ExponentSequence& seq, PairMode mode) {
    const std::size_t m = seq.m();
    KECertificate cert;
    cert.pair_mode = mode;

    cert.fano_sum = 0;
    for (const BigInt& v : seq.a) cert.fano_sum += Rational(1, v);

    // min{1/a_i} is attained at the largest entry; min{1/(b_i b_j)} at the
    // largest product, i.e. the two largest b values (or the square of the
    // largest when the diagonal pair is allowed).
    std::size_t a_max_idx = m - 1;
    std::size_t b1 = 0;  // index of largest b
    for (std::size_t i = 1; i < m; ++i) {
        if (seq.b[i] > seq.b[b1]) b1 = i;
    }
    std::size_t b2 = (b1 == 0) ? 1 : 0;  // index of largest b among the rest
    for (std::size_t i = 0; i < m; ++i) {
        if (i != b1 && seq.b[i] > seq.b[b2]) b2 = i;
    }

    BigInt bb_max;
    std::pair<std::size_t, std::size_t> bb_idx;
    if (mode == PairMode::IncludeDiagonal) {
        bb_max = seq.b[b1] * seq.b[b1];
        bb_idx = {b1, b1};
    } else {
        bb_max = seq.b[b1] * seq.b[b2];
        bb_idx = {std::min(b1, b2), std::max(b1, b2)};
    }

    Rational min_term;
    if (seq.a[a_max_idx] >= bb_max) {
        min_term = Rational(1, seq.a[a_max_idx]);
        cert.min_term_kind = MinTermKind::ReciprocalA;
        cert.min_term_indices = {a_max_idx, a_max_idx};
    } else {
        min_term = Rational(1, bb_max);
        cert.min_term_kind = MinTermKind::ReciprocalBB;
        cert.min_term_indices = bb_idx;
    }

    cert.upper_bound = 1 + Rational(m - 1, m - 2) * min_term;
    cert.passes_fano = cert.fano_sum > 1;
    cert.passes_upper = cert.fano_sum < cert.upper_bound;
    cert.passes = cert.passes_fano && cert.passes_upper;
    return cert;
}

bool check_contact_exclusion(const ExponentSequence& seq) {
    if (seq.m() < 4) throw std::invalid_argument("check_contact_exclusion: requires m >= 4");
    BigInt sum_w = 0;
    BigInt min_w = seq.w[0];
    for (const BigInt& wi : seq.w) {
        sum_w += wi;
        if (wi < min_w) min_w = wi;
    }
    return 2 * (sum_w - seq.C) < BigInt(seq.m() - 1) * min_w;
}

bool has_finite_automorphisms(const ExponentSequence& seq) {
    if (seq.m() < 4) return false;
    int twos = 0;
    for (const BigInt& v : seq.a) {
        if (v == 2) ++twos;
    }
    return twos <= 1;
}

}
