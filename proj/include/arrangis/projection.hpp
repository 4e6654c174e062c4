#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrangis/geometry.hpp"

namespace arrangis {

/**
 * A coordinate frame in which one chosen line is the line at infinity
 * (z = 0) and the projection (x, y) -> x of the affine chart z = 1 is
 * generic: no remaining line is vertical, no two parallel lines have
 * the same horizontal position, the multiple points lie in distinct
 * fibers with distinct real parts, and the strand order over the start
 * fiber is strict.  The frame is found by seeded unimodular shears that
 * fix the infinity line; every certificate condition is decided exactly.
 */

struct AffinePoint {
    std::vector<int> members;  // arrangement line indices through the point
    CyclotomicNumber x, y;
    int combinatorics_point;  // index into the arrangement's combinatorics
};

struct ProjectionFrame {
    int infinity_index = -1;
    std::array<std::array<CyclotomicNumber, 3>, 3> matrix;  // rows are the new coordinate forms
    std::vector<std::array<CyclotomicNumber, 3>> transformed;  // per-line coefficients, new coords

    // Certificate data.
    std::vector<AffinePoint> fibers;  // affine multiple points, sorted by Re(x), ascending
    CyclotomicNumber start_x;         // real; strictly left of every fiber
    int attempts_used = 0;
    std::uint64_t seed = 0;
};

ProjectionFrame choose_projection(const Arrangement& a, const std::string& infinity_label,
                                  std::uint64_t seed, int max_retries = 64);

// Re-runs the exact certificate checks on an existing frame.
bool certificate_holds(const Arrangement& a, const ProjectionFrame& frame);

}  // namespace arrangis
