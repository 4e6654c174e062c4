#include "arrangis/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "arrangis/errors.hpp"

namespace arrangis {

int Combinatorics::line_index(const std::string& label) const {
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i] == label) return static_cast<int>(i);
    return -1;
}

int Combinatorics::point_through(int line_a, int line_b) const {
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto& m = points[p];
        if (std::binary_search(m.begin(), m.end(), line_a) &&
            std::binary_search(m.begin(), m.end(), line_b))
            return static_cast<int>(p);
    }
    return -1;
}

std::string Combinatorics::point_id(int point) const {
    std::string id = "P";
    for (int l : points[point]) id += ":" + lines[l];
    return id;
}

std::vector<int> Combinatorics::points_on_line(int line) const {
    std::vector<int> out;
    for (std::size_t p = 0; p < points.size(); ++p)
        if (std::binary_search(points[p].begin(), points[p].end(), line))
            out.push_back(static_cast<int>(p));
    return out;
}

std::optional<CombinatoricsViolation> validate_combinatorics(const Combinatorics& c) {
    std::set<std::string> seen_labels;
    for (const auto& l : c.lines) {
        if (l.empty() || l.find_first_of(" \t\n,") != std::string::npos)
            return CombinatoricsViolation{"bad line label '" + l + "'"};
        if (!seen_labels.insert(l).second)
            return CombinatoricsViolation{"duplicate line label '" + l + "'"};
    }
    const int n = static_cast<int>(c.lines.size());
    std::map<std::pair<int, int>, int> pair_owner;
    for (std::size_t p = 0; p < c.points.size(); ++p) {
        const auto& m = c.points[p];
        if (m.size() < 2)
            return CombinatoricsViolation{"point subset #" + std::to_string(p) + " has fewer than 2 lines"};
        if (!std::is_sorted(m.begin(), m.end()) || std::adjacent_find(m.begin(), m.end()) != m.end())
            return CombinatoricsViolation{"point subset #" + std::to_string(p) + " is not a sorted set"};
        for (int l : m)
            if (l < 0 || l >= n)
                return CombinatoricsViolation{"point subset #" + std::to_string(p) + " names an unknown line"};
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                auto key = std::make_pair(m[i], m[j]);
                auto [it, inserted] = pair_owner.emplace(key, static_cast<int>(p));
                if (!inserted)
                    return CombinatoricsViolation{"pair {" + c.lines[m[i]] + "," + c.lines[m[j]] +
                                                  "} covered by points #" + std::to_string(it->second) +
                                                  " and #" + std::to_string(p)};
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!pair_owner.count({i, j}))
                return CombinatoricsViolation{"pair {" + c.lines[i] + "," + c.lines[j] +
                                              "} not covered by any point"};
    return std::nullopt;
}

void require_valid(const Combinatorics& c) {
    if (auto v = validate_combinatorics(c)) throw InputError("invalid combinatorics: " + v->message);
}

IncidenceGraph IncidenceGraph::build(const Combinatorics& c) {
    IncidenceGraph g;
    g.num_lines = static_cast<int>(c.lines.size());
    g.num_points = static_cast<int>(c.points.size());
    for (int p = 0; p < g.num_points; ++p)
        for (int l : c.points[p]) g.edges.emplace_back(l, g.point_vertex(p));
    g.adjacency.assign(g.vertex_count(), {});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        g.adjacency[g.edges[e].first].push_back(static_cast<int>(e));
        g.adjacency[g.edges[e].second].push_back(static_cast<int>(e));
    }
    return g;
}

Cycle Cycle::reversed() const {
    // (l0,p0,l1,p1,...,l_{r-1},p_{r-1}) backwards is
    // (l0,p_{r-1},l_{r-1},p_{r-2},...,l1,p0).
    Cycle r;
    const int n = length();
    r.lines.push_back(lines[0]);
    r.points.push_back(points[n - 1]);
    for (int i = n - 1; i >= 1; --i) {
        r.lines.push_back(lines[i]);
        r.points.push_back(points[i - 1]);
    }
    return r;
}

Cycle Cycle::rotated_to_front(int line) const {
    const int n = length();
    int at = -1;
    for (int i = 0; i < n; ++i)
        if (lines[i] == line) at = i;
    if (at < 0) throw InputError("line not in cycle support");
    Cycle r;
    for (int i = 0; i < n; ++i) {
        r.lines.push_back(lines[(at + i) % n]);
        r.points.push_back(points[(at + i) % n]);
    }
    return r;
}

Cycle Cycle::canonical() const {
    const int lowest = *std::min_element(lines.begin(), lines.end());
    Cycle a = rotated_to_front(lowest);
    Cycle b = a.reversed();
    return (a.lines[1] <= b.lines[1]) ? a : b;
}

void validate_cycle(const Combinatorics& c, const Cycle& cycle) {
    const int n = cycle.length();
    if (n < 2 || static_cast<int>(cycle.points.size()) != n)
        throw InputError("cycle must alternate at least two lines and points");
    std::set<int> seen;
    for (int l : cycle.lines) {
        if (l < 0 || l >= static_cast<int>(c.lines.size())) throw InputError("cycle names an unknown line");
        if (!seen.insert(l).second) throw InputError("cycle repeats line " + c.lines[l]);
    }
    for (int i = 0; i < n; ++i) {
        const int p = cycle.points[i];
        if (p < 0 || p >= static_cast<int>(c.points.size())) throw InputError("cycle names an unknown point");
        const auto& m = c.points[p];
        const int a = cycle.lines[i], b = cycle.lines[(i + 1) % n];
        if (!std::binary_search(m.begin(), m.end(), a) || !std::binary_search(m.begin(), m.end(), b))
            throw InputError("cycle point " + c.point_id(p) + " does not join " + c.lines[a] + " and " +
                             c.lines[b]);
        if (p == cycle.points[(i + 1) % n]) throw InputError("cycle backtracks through " + c.point_id(p));
    }
}

namespace {

// Breadth-first spanning forest over all vertices, roots in index order.
struct Forest {
    std::vector<int> parent;       // vertex -> parent vertex (-1 at roots)
    std::vector<int> parent_edge;  // vertex -> edge to the parent (-1 at roots)
    std::vector<char> tree_edge;   // edge -> in forest?
};

Forest spanning_forest(const IncidenceGraph& g) {
    Forest f;
    f.parent.assign(g.vertex_count(), -2);
    f.parent_edge.assign(g.vertex_count(), -1);
    f.tree_edge.assign(g.edges.size(), 0);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (f.parent[root] != -2) continue;
        f.parent[root] = -1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int e : g.adjacency[v]) {
                const int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
                if (f.parent[w] != -2) continue;
                f.parent[w] = v;
                f.parent_edge[w] = e;
                f.tree_edge[e] = 1;
                q.push(w);
            }
        }
    }
    return f;
}

std::vector<int> path_to_root(const Forest& f, int v) {
    std::vector<int> path{v};
    while (f.parent[v] >= 0) {
        v = f.parent[v];
        path.push_back(v);
    }
    return path;
}

// Vertex cycle of a non-tree edge (u,v): u, then the tree path v -> u.
std::vector<int> fundamental_vertex_cycle(const Forest& f, int u, int v) {
    std::vector<int> pu = path_to_root(f, u);
    std::vector<int> pv = path_to_root(f, v);
    // Trim the common tail above the meeting vertex.
    while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
        pu.pop_back();
        pv.pop_back();
    }
    std::vector<int> cyc(pu.begin(), pu.end());      // u ... meet
    for (std::size_t i = pv.size() - 1; i-- > 0;) cyc.push_back(pv[i]);  // ... back down to v
    return cyc;  // u, ..., meet, ..., v  (closing edge v-u implied)
}

Cycle alternating_cycle_from_vertices(const IncidenceGraph& g, const std::vector<int>& vs) {
    // Rotate so a line vertex comes first, then split into lines/points.
    const int n = static_cast<int>(vs.size());
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (vs[i] < g.num_lines) {
            start = i;
            break;
        }
    Cycle c;
    for (int i = 0; i < n; i += 2) {
        const int lv = vs[(start + i) % n];
        const int pv = vs[(start + i + 1) % n];
        c.lines.push_back(lv);
        c.points.push_back(pv - g.num_lines);
    }
    return c;
}

}  // namespace

std::vector<Cycle> cycle_basis(const Combinatorics& c) {
    const IncidenceGraph g = IncidenceGraph::build(c);
    const Forest f = spanning_forest(g);
    std::vector<Cycle> basis;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (f.tree_edge[e]) continue;
        const auto vs = fundamental_vertex_cycle(f, g.edges[e].first, g.edges[e].second);
        basis.push_back(alternating_cycle_from_vertices(g, vs));
    }
    return basis;
}

}  // namespace arrangis
