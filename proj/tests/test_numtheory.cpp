#include "doctest.h"

#include <random>
#include <vector>

#include "bplink/numtheory.hpp"

using namespace bplink;

namespace {

// Reference route for b_j: gcd against the directly computed lcm of the
// other entries, with no reuse of the production identity.
BigInt naive_gcd_with_lcm(const std::vector<BigInt>& a, std::size_t j) {
    BigInt l = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == j) continue;
        l = boost::multiprecision::lcm(l, a[i]);
    }
    return boost::multiprecision::gcd(a[j], l);
}

}  // namespace

TEST_SUITE("numtheory") {

TEST_CASE("sylvester sequence first seven terms") {
    const char* expected[] = {"2", "3", "7", "43", "1807", "3263443", "10650056950807"};
    for (unsigned k = 1; k <= 7; ++k) CHECK(sylvester_number(k) == BigInt(expected[k - 1]));
}

TEST_CASE("sylvester recurrence is product plus one") {
    BigInt prod = 1;
    for (unsigned k = 1; k <= 9; ++k) {
        CHECK(sylvester_number(k) == prod + 1);
        prod *= sylvester_number(k);
    }
}

TEST_CASE("classical bernoulli values") {
    CHECK(bernoulli_classical(0) == Rational(1));
    CHECK(bernoulli_classical(1) == Rational(-1, 2));
    CHECK(bernoulli_classical(2) == Rational(1, 6));
    CHECK(bernoulli_classical(3) == Rational(0));
    CHECK(bernoulli_classical(4) == Rational(-1, 30));
    CHECK(bernoulli_classical(10) == Rational(5, 66));
    CHECK(bernoulli_classical(12) == Rational(-691, 2730));
}

TEST_CASE("index convention takes absolute even values") {
    CHECK(bernoulli_topologists(1) == Rational(1, 6));
    CHECK(bernoulli_topologists(2) == Rational(1, 30));
    CHECK(bernoulli_topologists(3) == Rational(1, 42));
    CHECK(bernoulli_topologists(5) == Rational(5, 66));
    CHECK(bernoulli_topologists(7) == Rational(7, 6));
}

TEST_CASE("boundary sphere group orders") {
    CHECK(bp_order(8) == 28);
    CHECK(bp_order(12) == 992);
    CHECK(bp_order(16) == 8128);
    CHECK(bp_order(20) == 261632);
    CHECK_THROWS_AS(bp_order(10), std::invalid_argument);
    CHECK_THROWS_AS(bp_order(7), std::invalid_argument);
    CHECK_THROWS_AS(bp_order(4), std::invalid_argument);  // below the formula's domain
}

TEST_CASE("two torsion status of the even boundary groups") {
    CHECK(bp_even_status(6) == BpEvenStatus::Zero);
    CHECK(bp_even_status(14) == BpEvenStatus::Zero);
    CHECK(bp_even_status(30) == BpEvenStatus::Zero);
    CHECK(bp_even_status(62) == BpEvenStatus::Zero);
    CHECK(bp_even_status(10) == BpEvenStatus::Z2);
    CHECK(bp_even_status(18) == BpEvenStatus::Z2);
    CHECK(bp_even_status(34) == BpEvenStatus::Z2);
    CHECK(bp_even_status(126) == BpEvenStatus::Unknown);
    CHECK(bp_even_status(254) == BpEvenStatus::Unknown);
    CHECK_THROWS_AS(bp_even_status(8), std::invalid_argument);
}

TEST_CASE("primality on known values") {
    CHECK(is_probable_prime(2));
    CHECK(is_probable_prime(3));
    CHECK(is_probable_prime(101));
    CHECK(is_probable_prime(BigInt("1000000007")));
    CHECK(is_probable_prime(BigInt("170141183460469231731687303715884105727")));
    CHECK_FALSE(is_probable_prime(1));
    CHECK_FALSE(is_probable_prime(561));   // Carmichael
    CHECK_FALSE(is_probable_prime(6601));  // Carmichael
    CHECK_FALSE(is_probable_prime(BigInt("1000000007") * BigInt("1000000009")));
}

TEST_CASE("factorization recombines to the input") {
    for (const char* s : {"2", "60", "1024", "1806", "3263442", "999999999989",
                          "614889782588491410"}) {
        BigInt n(s);
        Factorization f = factorize(n);
        CHECK(f.value() == n);
        for (std::size_t i = 0; i + 1 < f.factors.size(); ++i)
            CHECK(f.factors[i].prime < f.factors[i + 1].prime);
        for (const FactorPower& fp : f.factors) CHECK(is_probable_prime(fp.prime));
    }
}

TEST_CASE("factorization splits a balanced semiprime") {
    BigInt p("1000000007"), q("1000000009");
    Factorization f = factorize(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == p);
    CHECK(f.factors[1].prime == q);
}

TEST_CASE("b computation on the worked example") {
    std::vector<BigInt> a = {2, 3, 7, 35};
    CHECK(gcd_with_lcm_of_others(a, 0) == 1);
    CHECK(gcd_with_lcm_of_others(a, 1) == 1);
    CHECK(gcd_with_lcm_of_others(a, 2) == 7);
    CHECK(gcd_with_lcm_of_others(a, 3) == 7);
    CHECK_THROWS_AS(gcd_with_lcm_of_others(a, 4), std::out_of_range);
}

TEST_CASE("b computation agrees with the naive lcm route") {
    std::mt19937_64 rng(0xb0a7a11ce5ull);
    std::uniform_int_distribution<int> len(3, 8);
    std::uniform_int_distribution<long> entry(2, 5000);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<BigInt> a;
        int n = len(rng);
        for (int i = 0; i < n; ++i) a.emplace_back(entry(rng));
        for (std::size_t j = 0; j < a.size(); ++j)
            CHECK(gcd_with_lcm_of_others(a, j) == naive_gcd_with_lcm(a, j));
    }
}

TEST_CASE("b divides its entry") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> entry(2, 100000);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> a = {entry(rng), entry(rng), entry(rng), entry(rng)};
        for (std::size_t j = 0; j < a.size(); ++j) {
            BigInt b = gcd_with_lcm_of_others(a, j);
            CHECK(a[j] % b == 0);
        }
    }
}

}
