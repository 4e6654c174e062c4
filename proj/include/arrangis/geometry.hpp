#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arrangis/combinatorics.hpp"
#include "arrangis/cyclotomic.hpp"

namespace arrangis {

/**
 * Exact projective lines a*x + b*y + c*z = 0 over Q(zeta_N), and ordered
 * arrangements of pairwise distinct lines sharing one cyclotomic order.
 */
struct ProjectiveLine {
    std::string label;
    std::array<CyclotomicNumber, 3> coeffs;
};

using ProjectivePoint = std::array<CyclotomicNumber, 3>;

struct Arrangement {
    unsigned order = 1;
    std::vector<ProjectiveLine> lines;

    int line_index(const std::string& label) const;
    std::vector<std::string> labels() const;
};

void require_valid(const Arrangement& a);

// Cross product of the coefficient triples, scaled so the first nonzero
// coordinate is 1.  Canonical, so equal points compare equal.
ProjectivePoint intersect(const ProjectiveLine& l1, const ProjectiveLine& l2);

bool line_contains(const ProjectiveLine& l, const ProjectivePoint& p);

// Groups the pairwise intersections into multiple points; point subsets
// are emitted in order of first occurrence over pairs (i,j), i < j.
Combinatorics combinatorics_of(const Arrangement& a);

struct RealizationMismatch {
    std::string message;
};

// Does combinatorics_of(a) agree with c as a labelled set system?
std::optional<RealizationMismatch> check_realizes(const Arrangement& a, const Combinatorics& c);

// Conjugates every coefficient (zeta -> zeta^{-1}).
Arrangement conjugate(const Arrangement& a);

}  // namespace arrangis
