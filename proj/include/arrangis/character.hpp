#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrangis/combinatorics.hpp"
#include "arrangis/root_of_unity.hpp"

namespace arrangis {

/**
 * Torsion character: a root of unity per line with total product 1.
 * Values are indexed parallel to the line order of the combinatorics
 * the character was built against.
 */
struct Character {
    std::vector<RootOfUnity> values;

    const RootOfUnity& value(int line) const { return values[line]; }
    bool is_trivial() const;
    Character inverse() const;
    Character operator*(const Character& o) const;
    bool operator==(const Character&) const = default;

    static Character trivial(const Combinatorics& c);
    // Validates the product-1 constraint and full line coverage.
    static Character from_exponents(const Combinatorics& c,
                                    const std::map<std::string, Rational>& exponents);
};

// xi(p): product of the values of the lines through p.
RootOfUnity point_value(const Combinatorics& c, const Character& xi, int point);

struct InnerCyclicCheck {
    bool ok = true;
    int failed_condition = 0;  // 1, 2 or 3 when !ok
    std::string detail;
};

/**
 * The three inner-cyclic conditions for a triplet (C, xi, gamma):
 *  (1) xi is 1 on every line of the cycle,
 *  (2) xi is 1 on every line through a point of the cycle,
 *  (3) xi(p) is 1 for every point on a line of the cycle's support.
 * Reports the first failure.
 */
InnerCyclicCheck is_inner_cyclic(const Combinatorics& c, const Character& xi, const Cycle& gamma);

}  // namespace arrangis
