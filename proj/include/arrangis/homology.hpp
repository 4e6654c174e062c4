#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrangis/character.hpp"
#include "arrangis/root_of_unity.hpp"

namespace arrangis {

/**
 * Element of the first homology of the arrangement exterior in the
 * meridian basis: with lines L_0..L_n the meridians satisfy the single
 * relation v_0 + v_1 + ... + v_n = 0, so classes are written on the
 * basis v_1..v_n and any v_0 contribution is rewritten eagerly at
 * construction.
 */
class HomologyClass {
public:
    HomologyClass() = default;
    explicit HomologyClass(std::vector<std::string> all_labels);
    // Raw integer coefficients per label; v_{labels[0]} gets eliminated.
    HomologyClass(std::vector<std::string> all_labels, const std::map<std::string, long long>& raw);

    const std::vector<std::string>& labels() const { return labels_; }
    long long coefficient(const std::string& label) const;
    bool is_zero() const;

    HomologyClass operator+(const HomologyClass& o) const;
    HomologyClass operator-() const;
    bool operator==(const HomologyClass&) const = default;

    // Nonzero coefficients in label order.
    std::vector<std::pair<std::string, long long>> support() const;

private:
    std::vector<std::string> labels_;     // all lines, in arrangement order
    std::vector<long long> coeffs_;       // aligned with labels_; coeffs_[0] == 0
};

// xi applied to the class: the sum of coefficient * exponent, mod 1.
// Well defined on the quotient because the character's exponents sum to
// an integer.
RootOfUnity evaluate(const Combinatorics& c, const Character& xi, const HomologyClass& h);

}  // namespace arrangis
