#include "arrangis/blowup.hpp"

#include <algorithm>
#include <queue>

#include "arrangis/errors.hpp"

namespace arrangis {

int BlownUpGraph::component_for_point(int point) const {
    for (std::size_t i = combinatorics.lines.size(); i < components.size(); ++i)
        if (components[i].source == point) return static_cast<int>(i);
    return -1;
}

BlownUpGraph blow_up(const Combinatorics& c) {
    require_valid(c);
    BlownUpGraph g;
    g.combinatorics = c;
    const int n = static_cast<int>(c.lines.size());
    std::vector<int> blown_count(n, 0);
    for (std::size_t p = 0; p < c.points.size(); ++p)
        if (c.multiplicity(static_cast<int>(p)) >= 3)
            for (int l : c.points[p]) ++blown_count[l];
    for (int l = 0; l < n; ++l)
        g.components.push_back({BlownUpGraph::Kind::Line, l, c.lines[l], 1 - blown_count[l]});
    for (std::size_t p = 0; p < c.points.size(); ++p) {
        if (c.multiplicity(static_cast<int>(p)) < 3) continue;
        g.components.push_back(
            {BlownUpGraph::Kind::Exceptional, static_cast<int>(p), c.point_id(static_cast<int>(p)), -1});
    }
    for (std::size_t p = 0; p < c.points.size(); ++p) {
        const int pi = static_cast<int>(p);
        if (c.multiplicity(pi) >= 3) {
            const int ec = g.component_for_point(pi);
            for (int l : c.points[p]) g.edges.push_back({std::min(l, ec), std::max(l, ec), pi});
        } else {
            g.edges.push_back({c.points[p][0], c.points[p][1], pi});
        }
    }
    g.adjacency.assign(g.components.size(), {});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        g.adjacency[g.edges[e].a].push_back(static_cast<int>(e));
        g.adjacency[g.edges[e].b].push_back(static_cast<int>(e));
    }
    return g;
}

RootOfUnity component_value(const BlownUpGraph& g, const Character& xi, int component) {
    const auto& comp = g.components[component];
    if (comp.kind == BlownUpGraph::Kind::Line) return xi.value(comp.source);
    return point_value(g.combinatorics, xi, comp.source);
}

InnerUnramified inner_unramified(const BlownUpGraph& g, const Character& xi) {
    const int m = static_cast<int>(g.components.size());
    std::vector<char> unramified(m, 0);
    for (int i = 0; i < m; ++i) unramified[i] = component_value(g, xi, i).is_one();
    InnerUnramified u;
    u.in_subset.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        if (!unramified[i]) continue;
        bool inner = true;
        for (int e : g.adjacency[i]) {
            const int other = g.edges[e].a == i ? g.edges[e].b : g.edges[e].a;
            if (!unramified[other]) {
                inner = false;
                break;
            }
        }
        if (inner) {
            u.in_subset[i] = 1;
            u.components.push_back(i);
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (u.in_subset[g.edges[e].a] && u.in_subset[g.edges[e].b]) u.edges.push_back(static_cast<int>(e));
    // b1 = E - V + #components of the induced subgraph.
    std::vector<int> comp_id(m, -1);
    int pieces = 0;
    for (int start : u.components) {
        if (comp_id[start] != -1) continue;
        comp_id[start] = pieces;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int e : g.adjacency[v]) {
                if (!u.in_subset[g.edges[e].a] || !u.in_subset[g.edges[e].b]) continue;
                const int w = g.edges[e].a == v ? g.edges[e].b : g.edges[e].a;
                if (comp_id[w] == -1) {
                    comp_id[w] = pieces;
                    q.push(w);
                }
            }
        }
        ++pieces;
    }
    u.first_betti = static_cast<int>(u.edges.size()) - static_cast<int>(u.components.size()) + pieces;
    return u;
}

Cycle component_cycle_to_incidence(const BlownUpGraph& g, const std::vector<int>& component_cycle) {
    const Combinatorics& c = g.combinatorics;
    Cycle out;
    const int n = static_cast<int>(component_cycle.size());
    for (int i = 0; i < n; ++i) {
        const int cur = component_cycle[i];
        const int nxt = component_cycle[(i + 1) % n];
        const auto& cc = g.components[cur];
        const auto& nc = g.components[nxt];
        if (cc.kind == BlownUpGraph::Kind::Line) {
            out.lines.push_back(cc.source);
            if (nc.kind == BlownUpGraph::Kind::Line) {
                const int p = c.point_through(cc.source, nc.source);
                if (p < 0) throw std::logic_error("line-line edge without a joining point");
                out.points.push_back(p);
            } else {
                out.points.push_back(nc.source);
            }
        }
        // Exceptional vertices contribute nothing extra: the point was
        // already emitted when leaving the previous line.
    }
    return out;
}

SubgraphForest subgraph_forest(const BlownUpGraph& g, const InnerUnramified& u, int preferred_root) {
    const int m = static_cast<int>(g.components.size());
    SubgraphForest f;
    f.parent.assign(m, -2);
    f.parent_edge.assign(m, -1);
    std::vector<char> edge_in_tree(g.edges.size(), 0);
    auto grow = [&](int root) {
        if (!u.in_subset[root] || f.parent[root] != -2) return;
        f.parent[root] = -1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int e : g.adjacency[v]) {
                if (!u.in_subset[g.edges[e].a] || !u.in_subset[g.edges[e].b]) continue;
                const int w = g.edges[e].a == v ? g.edges[e].b : g.edges[e].a;
                if (f.parent[w] != -2) continue;
                f.parent[w] = v;
                f.parent_edge[w] = e;
                edge_in_tree[e] = 1;
                q.push(w);
            }
        }
    };
    if (preferred_root >= 0) grow(preferred_root);
    for (int v : u.components) grow(v);
    for (int e : u.edges)
        if (!edge_in_tree[e]) f.nontree_edges.push_back(e);
    return f;
}

std::vector<int> fundamental_component_cycle(const BlownUpGraph& g, const SubgraphForest& f, int edge) {
    for (int e : f.nontree_edges) {
        if (e == edge) {
            const int a = g.edges[edge].a, b = g.edges[edge].b;
            auto to_root = [&](int v) {
                std::vector<int> path{v};
                while (f.parent[v] >= 0) {
                    v = f.parent[v];
                    path.push_back(v);
                }
                return path;
            };
            std::vector<int> pa = to_root(a), pb = to_root(b);
            while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
                pa.pop_back();
                pb.pop_back();
            }
            // After trimming, pa and pb share exactly their last vertex.
            // The cycle crosses the non-tree edge a -> b, then follows the
            // tree path b -> meet -> a.
            std::vector<int> cyc{a};
            for (int v : pb) {
                if (v == a) break;  // the meet is a itself
                cyc.push_back(v);
            }
            for (int i = static_cast<int>(pa.size()) - 2; i >= 1; --i) cyc.push_back(pa[i]);
            return cyc;
        }
    }
    throw InputError("edge is in the spanning forest");
}

}  // namespace arrangis
