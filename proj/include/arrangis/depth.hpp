#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrangis/blowup.hpp"
#include "arrangis/cyclotomic.hpp"
#include "arrangis/invariant.hpp"

namespace arrangis {

/**
 * Quasi-projective depth of a torsion character: the matrix A_xi is
 * indexed by the inner unramified components of the blown-up divisor,
 * carries self-intersections on the diagonal and, off the diagonal, the
 * sum over oriented edges of the invariant of the edge's fundamental
 * cycle (1 on forest edges, the inverse value on the reversed
 * orientation).  The depth is its corank; the forest only changes the
 * matrix, never the corank.
 */

struct DepthEdgeValue {
    std::string from, to;   // component ids, in the orientation used
    Cycle cycle;            // the fundamental cycle, mapped to the incidence graph
    RootOfUnity value;
};

struct DepthReport {
    std::vector<std::string> components;                      // U_xi member ids, ascending
    std::vector<int> self_intersections;                      // aligned with components
    std::vector<std::pair<std::string, std::string>> forest;  // spanning forest edges
    std::vector<DepthEdgeValue> nontree;                      // one entry per non-tree edge
    CyclotomicMatrix a_xi;
    std::size_t depth = 0;
};

// The fundamental cycle of a non-tree edge, oriented along the edge and
// back through the forest, mapped to the incidence graph.
Cycle edge_cycle(const BlownUpGraph& g, const SubgraphForest& forest, int edge);

DepthReport build_a_xi(const Arrangement& a, const Character& xi, std::uint64_t seed,
                       int forest_root = -1);

std::size_t quasi_projective_depth(const Arrangement& a, const Character& xi, std::uint64_t seed = 0);

}  // namespace arrangis
