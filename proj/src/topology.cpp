#include "bplink/topology.hpp"

#include <numeric>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace bplink {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

}  // namespace

BrieskornGraph build_graph(const ExponentSequence& seq) {
    const std::size_t n = seq.m();
    BrieskornGraph g;
    g.n = n;
    UnionFind uf(n);
    std::vector<unsigned> degree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (boost::integer::gcd(seq.a[i], seq.a[j]) > 1) {
                g.edges.emplace_back(i, j);
                uf.unite(i, j);
                ++degree[i];
                ++degree[j];
            }
        }
    }
    g.component.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.component[i] = uf.find(i);
    for (std::size_t i = 0; i < n; ++i) {
        if (degree[i] == 0) {
            g.isolated.push_back(i);
            if (seq.a[i] % 2 != 0) g.isolated_odd.push_back(i);
        }
    }
    // All even entries share the factor 2, so they lie in one component.
    std::size_t first_even = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (seq.a[i] % 2 == 0) { first_even = i; break; }
    }
    if (first_even < n) {
        std::size_t ev_id = uf.find(first_even);
        for (std::size_t i = 0; i < n; ++i) {
            if (uf.find(i) == ev_id) g.ev_vertices.push_back(i);
        }
    }
    return g;
}

SphereVerdict is_homotopy_sphere(const BrieskornGraph& graph, const ExponentSequence& seq) {
    if (seq.m() < 4) throw std::invalid_argument("is_homotopy_sphere: requires m >= 4");
    if (graph.isolated.size() >= 2) {
        return {true, SphereCriterion::TwoIsolated};
    }
    if (graph.isolated.size() == 1 && graph.isolated_odd.size() == 1 &&
        graph.ev_vertices.size() % 2 == 1) {
        for (std::size_t x = 0; x < graph.ev_vertices.size(); ++x) {
            for (std::size_t y = x + 1; y < graph.ev_vertices.size(); ++y) {
                if (boost::integer::gcd(seq.a[graph.ev_vertices[x]],
                                        seq.a[graph.ev_vertices[y]]) != 2) {
                    return {false, SphereCriterion::NotSphere};
                }
            }
        }
        return {true, SphereCriterion::EvenComponentRule};
    }
    return {false, SphereCriterion::NotSphere};
}

ArfReport arf_class(const BrieskornGraph& graph, const ExponentSequence& seq) {
    if (seq.link_dim() % 4 != 1) return {ArfClass::NotApplicable, TriState::No};
    SphereVerdict verdict = is_homotopy_sphere(graph, seq);
    if (!verdict.is_sphere) return {ArfClass::NotApplicable, TriState::No};

    bool kervaire = false;
    if (verdict.criterion == SphereCriterion::EvenComponentRule) {
        BigInt a0 = seq.a[graph.isolated[0]];
        BigInt r = a0 % 8;
        kervaire = (r == 3 || r == 5);
    }
    if (!kervaire) return {ArfClass::Standard, TriState::No};

    ArfReport report;
    report.cls = ArfClass::KervaireSphere;
    switch (bp_even_status(static_cast<unsigned>(seq.link_dim() + 1))) {
        case BpEvenStatus::Z2: report.exotic = TriState::Yes; break;
        case BpEvenStatus::Zero: report.exotic = TriState::No; break;
        case BpEvenStatus::Unknown: report.exotic = TriState::Unknown; break;
    }
    return report;
}

}
