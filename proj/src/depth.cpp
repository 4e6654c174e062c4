#include "arrangis/depth.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arrangis/errors.hpp"

namespace arrangis {

Cycle edge_cycle(const BlownUpGraph& g, const SubgraphForest& forest, int edge) {
    const auto comp_cycle = fundamental_component_cycle(g, forest, edge);
    return component_cycle_to_incidence(g, comp_cycle);
}

namespace {

unsigned lcm_orders(const std::vector<DepthEdgeValue>& values) {
    unsigned n = 1;
    for (const auto& v : values) {
        const Integer o = v.value.order();
        const unsigned long ov = o.get_ui();
        n = static_cast<unsigned>(std::lcm<unsigned long>(n, ov));
    }
    return n;
}

}  // namespace

DepthReport build_a_xi(const Arrangement& a, const Character& xi, std::uint64_t seed, int forest_root) {
    const Combinatorics c = combinatorics_of(a);
    if (xi.values.size() != c.lines.size()) throw InputError("character size mismatch");
    const BlownUpGraph g = blow_up(c);
    const InnerUnramified u = inner_unramified(g, xi);
    const SubgraphForest forest = subgraph_forest(g, u, forest_root);

    DepthReport report;
    for (int comp : u.components) {
        report.components.push_back(g.components[comp].id);
        report.self_intersections.push_back(g.components[comp].self_intersection);
    }
    for (int comp : u.components) {
        if (forest.parent[comp] >= 0)
            report.forest.emplace_back(g.components[forest.parent[comp]].id, g.components[comp].id);
    }

    // One invariant evaluation per non-tree edge; they are independent.
    // Exceptions must not unwind out of the parallel region, so the first
    // failure is carried across and rethrown afterwards.
    report.nontree.resize(forest.nontree_edges.size());
    std::string failure;
    bool genericity = false;
#pragma omp parallel for schedule(dynamic)
    for (long long idx = 0; idx < static_cast<long long>(forest.nontree_edges.size()); ++idx) {
        try {
            const int e = forest.nontree_edges[idx];
            DepthEdgeValue out;
            out.from = g.components[g.edges[e].a].id;
            out.to = g.components[g.edges[e].b].id;
            out.cycle = edge_cycle(g, forest, e);
            out.value = invariant(a, xi, out.cycle, seed).value;
            report.nontree[idx] = std::move(out);
        } catch (const std::exception& ex) {
#pragma omp critical
            if (failure.empty()) {
                failure = ex.what();
                genericity = dynamic_cast<const GenericityError*>(&ex) != nullptr;
            }
        }
    }
    if (!failure.empty()) {
        if (genericity) throw GenericityError(failure);
        throw InputError(failure);
    }

    const unsigned order = lcm_orders(report.nontree);
    const std::size_t m = u.components.size();
    std::map<int, std::size_t> row_of;
    for (std::size_t i = 0; i < m; ++i) row_of[u.components[i]] = i;

    CyclotomicMatrix mat = CyclotomicMatrix::zero(order, m);
    mat.labels = report.components;
    for (std::size_t i = 0; i < m; ++i)
        mat.at(i, i) = CyclotomicNumber::from_rational(order, Rational(report.self_intersections[i]));
    std::map<int, RootOfUnity> edge_value;  // non-tree edge -> invariant along (a -> b)
    for (std::size_t idx = 0; idx < forest.nontree_edges.size(); ++idx)
        edge_value[forest.nontree_edges[idx]] = report.nontree[idx].value;
    for (int e : u.edges) {
        const std::size_t i = row_of.at(g.edges[e].a);
        const std::size_t j = row_of.at(g.edges[e].b);
        RootOfUnity chi;  // 1 on forest edges
        if (auto it = edge_value.find(e); it != edge_value.end()) chi = it->second;
        mat.at(i, j) = mat.at(i, j) + embed_root(chi, order);
        mat.at(j, i) = mat.at(j, i) + embed_root(chi.inverse(), order);
    }
    report.a_xi = std::move(mat);
    report.depth = corank(report.a_xi);
    return report;
}

std::size_t quasi_projective_depth(const Arrangement& a, const Character& xi, std::uint64_t seed) {
    return build_a_xi(a, xi, seed).depth;
}

}  // namespace arrangis
