#pragma once

#include <optional>
#include <string>
#include <vector>

namespace arrangis {

/**
 * Pure incidence data of a line arrangement: an ordered set of lines L
 * and a set of multiple points P, each point being the subset of lines
 * through it.  Axioms: every point has at least two lines, and every
 * unordered pair of lines lies in exactly one point.
 */
struct Combinatorics {
    std::vector<std::string> lines;
    std::vector<std::vector<int>> points;  // member line indices, ascending

    int line_index(const std::string& label) const;  // -1 when absent
    int point_through(int line_a, int line_b) const;  // -1 when no point covers the pair
    std::string point_id(int point) const;            // "P:<l1>:<l2>:..." in line order
    int multiplicity(int point) const { return static_cast<int>(points[point].size()); }
    std::vector<int> points_on_line(int line) const;
};

struct CombinatoricsViolation {
    std::string message;
};

// Checks both axioms; reports the first offending subset or pair.
std::optional<CombinatoricsViolation> validate_combinatorics(const Combinatorics& c);
void require_valid(const Combinatorics& c);  // throws InputError on violation

/**
 * Bipartite incidence graph: one vertex per line, one per point, an edge
 * per incidence.  Vertex ids: lines first (0..L-1), then points.
 */
struct IncidenceGraph {
    int num_lines = 0;
    int num_points = 0;
    std::vector<std::pair<int, int>> edges;       // (line vertex, point vertex), deterministic order
    std::vector<std::vector<int>> adjacency;      // vertex -> incident edge indices

    int vertex_count() const { return num_lines + num_points; }
    int point_vertex(int point) const { return num_lines + point; }
    static IncidenceGraph build(const Combinatorics& c);
};

/**
 * A circular cycle of the incidence graph, stored as the alternating
 * vertex sequence l_0, p_0, l_1, p_1, ..., l_{r-1}, p_{r-1} where point
 * p_j joins line l_j to line l_{j+1} (indices mod r).
 */
struct Cycle {
    std::vector<int> lines;
    std::vector<int> points;

    int length() const { return static_cast<int>(lines.size()); }
    Cycle reversed() const;
    Cycle rotated_to_front(int line) const;  // same orientation, starts at the given line
    // Rotate to the smallest line index and orient toward its smaller neighbour.
    Cycle canonical() const;
    bool operator==(const Cycle&) const = default;
};

// Throws InputError unless the sequence is a valid reduced cycle of the
// incidence graph: incidences hold, no repeated line vertex, length >= 2,
// no immediate backtracking through the same point.
void validate_cycle(const Combinatorics& c, const Cycle& cycle);

/**
 * Fundamental cycles of a deterministic spanning forest (breadth-first
 * from the lowest-index vertex, edges scanned in listed order): one
 * cycle per non-tree edge, so the basis has E - V + #components members.
 */
std::vector<Cycle> cycle_basis(const Combinatorics& c);

}  // namespace arrangis
