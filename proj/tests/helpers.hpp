#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "arrangis/character.hpp"
#include "arrangis/combinatorics.hpp"
#include "arrangis/geometry.hpp"
#include "arrangis/io.hpp"

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "tests/fixtures"
#endif

namespace testutil {

using namespace arrangis;

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

inline Arrangement load_fixture_arrangement(const std::string& name) {
    return load_arrangement(fixture_path(name));
}

inline Character load_fixture_character(const std::string& name, const Combinatorics& c) {
    const Json j = Json::parse(read_file(fixture_path(name)));
    return character_from_json(j, c);
}

// The incidence data of the 7-line Ceva arrangement: nine points, six of
// them triple.
inline Combinatorics ceva7_combinatorics() {
    Combinatorics c;
    for (int i = 0; i <= 6; ++i) c.lines.push_back("L" + std::to_string(i));
    c.points = {{0, 1, 2}, {0, 3}, {0, 4, 5}, {0, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 4}, {2, 5, 6}, {3, 6}};
    return c;
}

inline Character ceva7_character(const Combinatorics& c) {
    std::map<std::string, Rational> exps;
    const int halves[] = {0, 1, 1, 0, 1, 1, 0};
    for (int i = 0; i <= 6; ++i) exps["L" + std::to_string(i)] = Rational(halves[i], 2);
    return Character::from_exponents(c, exps);
}

inline Cycle ceva7_cycle(const Combinatorics& c) {
    // L0 -> {L0,L3} -> L3 -> {L3,L6} -> L6 -> {L0,L6} -> L0
    Cycle g;
    g.lines = {0, 3, 6};
    g.points = {c.point_through(0, 3), c.point_through(3, 6), c.point_through(0, 6)};
    return g;
}

// MacLane's combinatorics built from the plane over the field with three
// elements: lines of the arrangement are the nonzero vectors, points are
// the affine lines of the plane (restricted to subsets of size >= 2).
inline Combinatorics maclane_combinatorics_bruteforce() {
    // vector (x,y) of F_3^2 -> arrangement line number 1..8
    std::map<std::pair<int, int>, int> label = {{{1, 0}, 6}, {{2, 0}, 5}, {{0, 1}, 2}, {{1, 1}, 1},
                                                {{2, 1}, 3}, {{0, 2}, 4}, {{1, 2}, 7}, {{2, 2}, 8}};
    Combinatorics c;
    for (int i = 1; i <= 8; ++i) c.lines.push_back("L" + std::to_string(i));
    std::set<std::vector<int>> points;
    // Affine lines of F_3^2: direction (dx,dy), base point (bx,by).
    const std::pair<int, int> dirs[] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    for (auto [dx, dy] : dirs) {
        for (int bx = 0; bx < 3; ++bx) {
            for (int by = 0; by < 3; ++by) {
                std::vector<int> members;
                for (int t = 0; t < 3; ++t) {
                    const int x = (bx + t * dx) % 3, y = (by + t * dy) % 3;
                    if (x == 0 && y == 0) continue;
                    members.push_back(label.at({x, y}) - 1);
                }
                std::sort(members.begin(), members.end());
                if (members.size() >= 2) points.insert(members);
            }
        }
    }
    for (const auto& p : points) c.points.push_back(p);
    // Deterministic order is irrelevant to callers; keep the set order.
    return c;
}

inline Character maclane_character(const Combinatorics& c) {
    std::map<std::string, Rational> exps;
    const int thirds[] = {0, 1, 1, 1, 2, 0, 0, 2, 2};  // L0..L8
    for (int i = 0; i <= 8; ++i) {
        const std::string lbl = "L" + std::to_string(i);
        if (c.line_index(lbl) >= 0) exps[lbl] = Rational(thirds[i], 3);
    }
    return Character::from_exponents(c, exps);
}

inline Cycle maclane_cycle(const Combinatorics& c) {
    // L0 -> {L0,L6} -> L6 -> {L5,L6} -> L5 -> {L0,L5} -> L0
    Cycle g;
    g.lines = {c.line_index("L0"), c.line_index("L6"), c.line_index("L5")};
    g.points = {c.point_through(g.lines[0], g.lines[1]), c.point_through(g.lines[1], g.lines[2]),
                c.point_through(g.lines[2], g.lines[0])};
    return g;
}

// Character for the 8-line Ceva variant whose extra line turns L3^L6
// into a triple point.
inline Character ceva8_character(const Combinatorics& c) {
    std::map<std::string, Rational> exps;
    const int halves[] = {0, 1, 1, 0, 1, 1, 0, 0};
    for (int i = 0; i <= 7; ++i) exps["L" + std::to_string(i)] = Rational(halves[i], 2);
    return Character::from_exponents(c, exps);
}

// n lines through one point plus nothing else.
inline Combinatorics pencil(int n) {
    Combinatorics c;
    std::vector<int> all;
    for (int i = 0; i < n; ++i) {
        c.lines.push_back("L" + std::to_string(i));
        all.push_back(i);
    }
    c.points = {all};
    return c;
}

// Three lines in general position.
inline Combinatorics triangle() {
    Combinatorics c;
    c.lines = {"A", "B", "C"};
    c.points = {{0, 1}, {0, 2}, {1, 2}};
    return c;
}

}  // namespace testutil
