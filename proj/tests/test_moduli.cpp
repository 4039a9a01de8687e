#include "doctest.h"

#include <random>
#include <vector>

#include "bplink/errors.hpp"
#include "bplink/moduli.hpp"
#include "bplink/numtheory.hpp"

using namespace bplink;

namespace {

ExponentSequence seq_of(std::initializer_list<long> vals) {
    std::vector<BigInt> raw;
    for (long v : vals) raw.emplace_back(v);
    return derive(std::move(raw));
}

std::vector<BigInt> weights_of(std::initializer_list<long> vals) {
    std::vector<BigInt> w;
    for (long v : vals) w.emplace_back(v);
    return w;
}

}  // namespace

TEST_SUITE("moduli") {

TEST_CASE("monomial counts match hand enumeration") {
    // 30e1+20e2+15e3+12e4 = 60: (2,0,0,0),(0,3,0,0),(0,0,4,0),(0,0,0,5),(1,0,2,0)
    CHECK(count_monomials(weights_of({30, 20, 15, 12}), BigInt(60)) == 5);
    // x+y = 3 in non-negative integers: four solutions
    CHECK(count_monomials(weights_of({1, 1}), BigInt(3)) == 4);
    CHECK(count_monomials(weights_of({30, 30, 30, 20, 12}), BigInt(60)) == 8);
    // degree 0 has exactly the empty monomial
    CHECK(count_monomials(weights_of({5, 7}), BigInt(0)) == 1);
    // no weight divides into 1
    CHECK(count_monomials(weights_of({5, 7}), BigInt(1)) == 0);
}

TEST_CASE("monomial count honors its table cap") {
    CHECK_THROWS_AS(count_monomials(weights_of({1, 2, 3}), BigInt(1000), BigInt(10)),
                    BudgetExceeded);
}

TEST_CASE("five dimensional example has a ten dimensional family") {
    ExponentSequence s = seq_of({2, 3, 7, 35});
    ModuliReport auto_r = moduli_dimension(s);
    CHECK(auto_r.real_dim == 10);
    CHECK(auto_r.complex_dim == 5);
    CHECK(auto_r.dim_sections_d == 10);
    CHECK(auto_r.dim_sections_wi == std::vector<BigInt>{1, 1, 2, 1});
    CHECK(auto_r.exact);
    CHECK_FALSE(auto_r.clamped);
    ModuliReport dp_r = moduli_dimension(s, ModuliStrategy::ForceDP);
    CHECK(dp_r.real_dim == auto_r.real_dim);
    CHECK(dp_r.dim_sections_d == auto_r.dim_sections_d);
}

TEST_CASE("seven dimensional example has an eighty two dimensional family") {
    ExponentSequence s = seq_of({2, 3, 7, 43, 1333});
    ModuliReport auto_r = moduli_dimension(s);
    CHECK(auto_r.real_dim == 82);
    CHECK(auto_r.exact);
    ModuliReport dp_r = moduli_dimension(s, ModuliStrategy::ForceDP);
    CHECK(dp_r.real_dim == 82);
}

TEST_CASE("tail pattern closed form agrees with the table where both run") {
    // Largest tail instance whose lcm still fits a DP table.
    ExponentSequence s = seq_of({2, 3, 7, 43, 41 * 43});
    ModuliReport auto_r = moduli_dimension(s);
    ModuliReport dp_r = moduli_dimension(s, ModuliStrategy::ForceDP);
    CHECK(auto_r.real_dim == dp_r.real_dim);
    CHECK(auto_r.complex_dim == dp_r.complex_dim);
    CHECK(auto_r.dim_sections_d == dp_r.dim_sections_d);
    CHECK(auto_r.dim_sections_wi == dp_r.dim_sections_wi);
}

TEST_CASE("tail pattern closed form agrees with the table for the giant family") {
    // Sequence c1..c7, (c7-2)c7 whose lcm makes the DP table infeasible;
    // the closed form answers instantly.
    std::vector<BigInt> raw;
    for (int k = 1; k <= 7; ++k) raw.push_back(sylvester_number(k));
    BigInt c7 = raw.back();
    raw.push_back((c7 - 2) * c7);
    ExponentSequence s = derive(std::move(raw));
    ModuliReport r = moduli_dimension(s);
    CHECK(r.real_dim == BigInt("21300113901610"));
    CHECK(r.exact);
}

TEST_CASE("negative raw difference is clamped and flagged") {
    ExponentSequence s = seq_of({2, 2, 2, 3, 5});
    ModuliReport r = moduli_dimension(s);
    CHECK(r.dim_sections_d == 8);
    CHECK(r.complex_dim == 0);
    CHECK(r.real_dim == 0);
    CHECK(r.clamped);
    CHECK_FALSE(r.exact);  // infinite automorphisms: repeated weight structure
}

TEST_CASE("near misses of the tail pattern fall back to the table") {
    // 34 and 36 bracket the tail value 35 = (7-2)*7; both must go through
    // the DP route and still satisfy the defining difference formula.
    for (long last : {34L, 36L}) {
        ExponentSequence s = seq_of({2, 3, 7, last});
        ModuliReport r = moduli_dimension(s);
        BigInt expect = r.dim_sections_d;
        for (const BigInt& v : r.dim_sections_wi) expect -= v;
        if (expect < 0) expect = 0;
        CHECK(r.complex_dim == expect);
        CHECK(r.real_dim == 2 * r.complex_dim);
    }
}

TEST_CASE("strategies agree on random sequences") {
    std::mt19937_64 rng(0x0dd5eedULL);
    std::uniform_int_distribution<long> entry(2, 24);
    std::uniform_int_distribution<int> length(4, 6);
    int checked = 0;
    while (checked < 100) {
        int m = length(rng);
        std::vector<BigInt> raw;
        for (int i = 0; i < m; ++i) raw.emplace_back(entry(rng));
        ExponentSequence s = derive(std::move(raw));
        if (s.C > 200'000) continue;  // keep the DP table small
        ++checked;
        ModuliReport a = moduli_dimension(s, ModuliStrategy::Auto);
        ModuliReport f = moduli_dimension(s, ModuliStrategy::ForceDP);
        CHECK(a.real_dim == f.real_dim);
        CHECK(a.complex_dim == f.complex_dim);
        CHECK(a.clamped == f.clamped);
        CHECK(a.real_dim == 2 * a.complex_dim);
        CHECK(a.real_dim >= 0);
    }
}

}
