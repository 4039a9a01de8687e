#include "doctest.h"

#include <vector>

#include "bplink/topology.hpp"

using namespace bplink;

namespace {

ExponentSequence seq_of(std::initializer_list<long> vals) {
    std::vector<BigInt> raw;
    for (long v : vals) raw.emplace_back(v);
    return derive(std::move(raw));
}

SphereVerdict verdict_of(std::initializer_list<long> vals) {
    ExponentSequence s = seq_of(vals);
    return is_homotopy_sphere(build_graph(s), s);
}

ArfReport arf_of(std::initializer_list<long> vals) {
    ExponentSequence s = seq_of(vals);
    return arf_class(build_graph(s), s);
}

}  // namespace

TEST_SUITE("topology") {

TEST_CASE("graph connects entries with a common factor") {
    ExponentSequence s = seq_of({2, 3, 7, 35});
    BrieskornGraph g = build_graph(s);
    CHECK(g.n == 4);
    REQUIRE(g.edges.size() == 1);  // only gcd(7, 35) > 1
    CHECK(g.edges[0] == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(g.isolated == std::vector<std::size_t>{0, 1});
    CHECK(g.isolated_odd == std::vector<std::size_t>{1});
}

TEST_CASE("two isolated vertices give a sphere") {
    SphereVerdict v = verdict_of({2, 3, 7, 35});
    CHECK(v.is_sphere);
    CHECK(v.criterion == SphereCriterion::TwoIsolated);
}

TEST_CASE("even component rule on the alternating family") {
    SphereVerdict v = verdict_of({2, 2, 2, 3, 5});
    CHECK(v.is_sphere);
    CHECK(v.criterion == SphereCriterion::TwoIsolated);  // 3 and 5 both isolated
    // Unique isolated vertex 3 (odd), even component {2, 2, 2} of odd size
    // with pairwise gcd exactly 2.
    SphereVerdict w = verdict_of({2, 2, 2, 3});
    CHECK(w.is_sphere);
    CHECK(w.criterion == SphereCriterion::EvenComponentRule);
}

TEST_CASE("even component rule on the even family") {
    SphereVerdict v = verdict_of({2, 4, 6, 14, 86, 101});
    CHECK(v.is_sphere);
    CHECK(v.criterion == SphereCriterion::EvenComponentRule);
}

TEST_CASE("no isolated vertex is not a sphere") {
    SphereVerdict v = verdict_of({2, 3, 4, 6});
    CHECK_FALSE(v.is_sphere);
    CHECK(v.criterion == SphereCriterion::NotSphere);
}

TEST_CASE("unique even isolated vertex is not a sphere") {
    SphereVerdict v = verdict_of({2, 3, 9, 15});
    CHECK_FALSE(v.is_sphere);
}

TEST_CASE("all odd with one isolated vertex is not a sphere") {
    // Empty even component: size zero is even, so the rule fails.
    SphereVerdict v = verdict_of({3, 3, 3, 5});
    CHECK_FALSE(v.is_sphere);
}

TEST_CASE("even component of even size is not a sphere") {
    // Unique isolated vertex 3, but the even component {2, 2, 2, 2} has
    // even size.
    SphereVerdict v = verdict_of({2, 2, 2, 2, 3});
    CHECK_FALSE(v.is_sphere);
}

TEST_CASE("pairwise gcd above two breaks the even component rule") {
    // Unique isolated vertex 3; 4 and 8 share a factor of 4 inside the
    // even component.
    SphereVerdict v = verdict_of({2, 3, 4, 8});
    CHECK_FALSE(v.is_sphere);
}

TEST_CASE("sphere test requires at least four entries") {
    ExponentSequence s = seq_of({2, 3, 7});
    BrieskornGraph g = build_graph(s);
    CHECK_THROWS_AS(is_homotopy_sphere(g, s), std::invalid_argument);
}

TEST_CASE("arf class on dimension one mod four") {
    ArfReport a = arf_of({2, 3, 7, 35});
    CHECK(a.cls == ArfClass::Standard);
    CHECK(a.exotic == TriState::No);

    // Isolated vertex 3 with remainder 3 mod 8: Kervaire sphere, standard
    // in dimension 5 because the relevant boundary group vanishes.
    ArfReport k5 = arf_of({2, 2, 2, 3});
    CHECK(k5.cls == ArfClass::KervaireSphere);
    CHECK(k5.exotic == TriState::No);

    // Same construction one dimension block up: genuinely exotic.
    ArfReport k9 = arf_of({2, 4, 6, 14, 86, 101});
    CHECK(k9.cls == ArfClass::KervaireSphere);
    CHECK(k9.exotic == TriState::Yes);

    ArfReport s9 = arf_of({2, 4, 6, 14, 86, 89});
    CHECK(s9.cls == ArfClass::Standard);
}

TEST_CASE("arf class is not applicable off dimension one mod four") {
    ArfReport a = arf_of({2, 3, 7, 43, 1333});  // dimension 7
    CHECK(a.cls == ArfClass::NotApplicable);
    ArfReport b = arf_of({2, 3, 4, 6});  // not a sphere
    CHECK(b.cls == ArfClass::NotApplicable);
}

TEST_CASE("isolated remainder five mod eight also gives kervaire") {
    // Isolated vertex 13 with remainder 5 mod 8.
    ArfReport a = arf_of({2, 2, 2, 13});
    CHECK(a.cls == ArfClass::KervaireSphere);
    ArfReport b = arf_of({2, 2, 2, 15});  // 15 is 7 mod 8: standard
    CHECK(b.cls == ArfClass::Standard);
}

}
