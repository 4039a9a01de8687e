#include "doctest.h"

#include <random>
#include <vector>

#include "bplink/errors.hpp"
#include "bplink/signature.hpp"

using namespace bplink;

namespace {

ExponentSequence seq_of(std::initializer_list<long> vals) {
    std::vector<BigInt> raw;
    for (long v : vals) raw.emplace_back(v);
    return derive(std::move(raw));
}

}  // namespace

TEST_SUITE("signature") {

TEST_CASE("classical alternating family has signature eight k") {
    long expected_k[] = {1, 1, 2, 2, 3, 3};
    long last[] = {5, 7, 11, 13, 17, 19};
    for (int i = 0; i < 6; ++i) {
        ExponentSequence s = seq_of({2, 2, 2, 3, last[i]});
        CHECK(signature_brute(s).tau == 8 * expected_k[i]);
        CHECK(signature_dp(s).tau == 8 * expected_k[i]);
        CHECK(signature_zagier(s).tau == 8 * expected_k[i]);
    }
}

TEST_CASE("worked seven dimensional example") {
    ExponentSequence s = seq_of({2, 3, 7, 43, 1333});
    SignatureResult dp = signature_dp(s);
    CHECK(dp.tau == 224000);
    CHECK(dp.tau % 8 == 0);
    SignatureResult zg = signature_zagier(s, 113);
    CHECK(zg.tau == 224000);
}

TEST_CASE("three independent engines agree on random sequences") {
    std::mt19937_64 rng(0x51674a7uLL);
    std::uniform_int_distribution<long> entry(2, 14);
    int checked = 0;
    while (checked < 200) {
        std::vector<BigInt> raw = {entry(rng), entry(rng), entry(rng), entry(rng), entry(rng)};
        ExponentSequence s = derive(std::move(raw));
        BigInt lattice = 1;
        for (const BigInt& v : s.a) lattice *= v - 1;
        if (lattice > 100000) continue;
        ++checked;
        BigInt brute = signature_brute(s).tau;
        CHECK(signature_dp(s).tau == brute);
        if (s.C <= 10000) CHECK(signature_zagier(s).tau == brute);
    }
}

TEST_CASE("even length input is rejected") {
    CHECK_THROWS_AS(signature_dp(seq_of({2, 3, 7, 43})), std::invalid_argument);
    CHECK_THROWS_AS(signature_brute(seq_of({2, 3, 7, 43})), std::invalid_argument);
    CHECK_THROWS_AS(signature_zagier(seq_of({2, 3, 7, 43})), std::invalid_argument);
}

TEST_CASE("budget guards throw instead of running over") {
    ExponentSequence s = seq_of({2, 3, 7, 43, 1333});
    CHECK_THROWS_AS(signature_brute(s, BigInt(1000)), BudgetExceeded);
    CHECK_THROWS_AS(signature_dp(s, 1024), BudgetExceeded);
    CHECK_THROWS_AS(signature_zagier(s, 64, BigInt(100)), BudgetExceeded);
}

TEST_CASE("signature result reports its method and sizes") {
    ExponentSequence s = seq_of({2, 2, 2, 3, 5});
    SignatureResult brute = signature_brute(s);
    CHECK(brute.method == SignatureMethod::BruteLattice);
    CHECK(brute.lattice_size == 8);  // 1 * 1 * 1 * 2 * 4
    SignatureResult dp = signature_dp(s);
    CHECK(dp.method == SignatureMethod::PolynomialDP);
    CHECK(dp.lattice_size == 8);
}

TEST_CASE("boundary class from signature") {
    BpClass one = bp_class_of(BigInt(8), 7);
    CHECK(one.oriented == 1);
    CHECK(one.unoriented == 1);
    BpClass zero = bp_class_of(BigInt(224000), 7);
    CHECK(zero.oriented == 0);
    CHECK(zero.unoriented == 0);
    BpClass neg = bp_class_of(BigInt(-8), 7);
    CHECK(neg.oriented == 27);
    CHECK(neg.unoriented == 1);
    BpClass wrap = bp_class_of(BigInt(8) * 28, 7);
    CHECK(wrap.oriented == 0);
    BpClass mid = bp_class_of(BigInt(8) * 15, 7);
    CHECK(mid.oriented == 15);
    CHECK(mid.unoriented == 13);
    BpClass eleven = bp_class_of(BigInt(8 * 200), 11);  // group order 992
    CHECK(eleven.oriented == 200);
    CHECK(eleven.unoriented == 200);
}

TEST_CASE("boundary class rejects bad inputs") {
    CHECK_THROWS_AS(bp_class_of(BigInt(4), 7), std::domain_error);
    CHECK_THROWS_AS(bp_class_of(BigInt(8), 9), std::invalid_argument);
    CHECK_THROWS_AS(bp_class_of(BigInt(8), 3), std::invalid_argument);
}

TEST_CASE("lane escalation keeps exact counts on a wide lattice") {
    // Lattice size near 2e10 forces the 64 bit lane while the lcm stays 512,
    // so the cotangent engine can cross-check the wraparound arithmetic.
    ExponentSequence s = seq_of({2, 4, 8, 16, 32, 64, 128, 256, 512});
    CHECK(s.C == 512);
    SignatureResult dp = signature_dp(s);
    CHECK(dp.lattice_size > (BigInt(1) << 31));
    SignatureResult zg = signature_zagier(s, 113);
    CHECK(dp.tau == zg.tau);
}

}
