#pragma once

#include <string>
#include <vector>

#include "arrangis/character.hpp"
#include "arrangis/combinatorics.hpp"

namespace arrangis {

/**
 * Dual graph of the normal-crossing divisor obtained by blowing up the
 * points of multiplicity >= 3: one component per strict line transform
 * and one per exceptional divisor.  A blown-up incidence contributes a
 * line-exceptional edge; a double point keeps a direct line-line edge.
 * Self-intersections: 1 minus the number of blown-up points on a line,
 * and -1 on every exceptional component.
 */
struct BlownUpGraph {
    enum class Kind { Line, Exceptional };
    struct Component {
        Kind kind;
        int source;  // line index, or point index for exceptional components
        std::string id;
        int self_intersection;
    };
    struct Edge {
        int a, b;       // component indices, a < b
        int via_point;  // the arrangement point behind this edge
    };

    Combinatorics combinatorics;
    std::vector<Component> components;  // lines first (line order), then exceptionals (point order)
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adjacency;  // component -> incident edge indices

    int component_for_line(int line) const { return line; }
    int component_for_point(int point) const;  // -1 when the point was not blown up
};

BlownUpGraph blow_up(const Combinatorics& c);

// Character value on a component: xi(l) on a line, xi(p) on the
// exceptional divisor over p (the meridian of the preimage of p).
RootOfUnity component_value(const BlownUpGraph& g, const Character& xi, int component);

/**
 * Inner unramified part: components where the character is 1 and all
 * neighbours carry 1 as well, together with the induced subgraph.
 */
struct InnerUnramified {
    std::vector<int> components;        // ascending component indices
    std::vector<int> edges;             // indices into BlownUpGraph::edges
    std::vector<char> in_subset;        // per component
    int first_betti = 0;                // b1 of the induced subgraph
};

InnerUnramified inner_unramified(const BlownUpGraph& g, const Character& xi);

// A cycle of the induced subgraph mapped back to the incidence graph:
// exceptional vertices become their point vertices, line-line edges are
// expanded through the double point joining the two lines.
Cycle component_cycle_to_incidence(const BlownUpGraph& g, const std::vector<int>& component_cycle);

/**
 * Spanning forest of the induced subgraph (breadth-first from a chosen
 * root component, lowest-index first among the remaining ones), plus the
 * non-tree edges in listed order.
 */
struct SubgraphForest {
    std::vector<int> parent;        // component -> parent component (-1 at roots, -2 outside)
    std::vector<int> parent_edge;   // component -> blown-up-graph edge index
    std::vector<int> nontree_edges; // blown-up-graph edge indices
};

SubgraphForest subgraph_forest(const BlownUpGraph& g, const InnerUnramified& u, int preferred_root = -1);

// Component cycle of a non-tree edge e=(a,b): a, b, then the forest path
// back from b to a.
std::vector<int> fundamental_component_cycle(const BlownUpGraph& g, const SubgraphForest& f, int edge);

}  // namespace arrangis
