#pragma once

// Homotopy-sphere recognition for Brieskorn-Pham links via the gcd graph,
// and the Arf-invariant classification in dimensions 4k+1.

#include <cstddef>
#include <utility>
#include <vector>

#include "bplink/ke.hpp"

namespace bplink {

// Graph on the exponents: vertices are indices into seq.a, and (i,j) is an
// edge iff gcd(a_i, a_j) > 1. ev_vertices is the connected component that
// contains every even entry (it may contain odd entries too); empty when no
// entry is even.
struct BrieskornGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
    std::vector<std::size_t> component;                      // component id per vertex
    std::vector<std::size_t> isolated;                       // degree-0 vertices
    std::vector<std::size_t> isolated_odd;                   // isolated with odd a_i
    std::vector<std::size_t> ev_vertices;
};

BrieskornGraph build_graph(const ExponentSequence& seq);

enum class SphereCriterion { TwoIsolated, EvenComponentRule, NotSphere };

struct SphereVerdict {
    bool is_sphere = false;
    SphereCriterion criterion = SphereCriterion::NotSphere;
};

// The link (of dimension 2m-3, m >= 4) is homeomorphic to the sphere iff
// either the graph has at least two isolated vertices, or it has a unique
// isolated vertex with odd label and the even component has an odd number
// of vertices with gcd exactly 2 for every distinct pair in it.
// Throws std::invalid_argument for m < 4.
SphereVerdict is_homotopy_sphere(const BrieskornGraph& graph, const ExponentSequence& seq);

enum class ArfClass { NotApplicable, Standard, KervaireSphere };
enum class TriState { No, Yes, Unknown };

// Arf classification, meaningful for homotopy spheres of dimension 4k+1:
// the Kervaire sphere arises exactly when the even-component rule applied
// and the unique isolated label is congruent to +-3 mod 8. exotic reports
// whether that Kervaire sphere is actually exotic, which depends on the
// (partly open) triviality of bP_{4k+2}.
struct ArfReport {
    ArfClass cls = ArfClass::NotApplicable;
    TriState exotic = TriState::No;
};

ArfReport arf_class(const BrieskornGraph& graph, const ExponentSequence& seq);

}
