#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrangis/homology.hpp"
#include "arrangis/projection.hpp"
#include "arrangis/tracker.hpp"
#include "arrangis/wiring.hpp"

namespace arrangis {

/**
 * Homology images of nearby cycles read off a braided wiring diagram,
 * and the invariant of an inner-cyclic triplet: the character value of
 * such an image.  The pair form takes the braid from the start fiber to
 * the fiber where the two lines meet; a general cycle walks its support
 * from fiber to fiber, always through the line at infinity.
 */

// A cycle phrased in labels: lines, and between consecutive lines the
// joining point's member labels (used to locate the fiber; points
// through the infinity line sit at fiber 0).
struct LabelCycle {
    std::vector<std::string> lines;
    std::vector<std::vector<std::string>> point_members;
};

LabelCycle to_label_cycle(const Combinatorics& c, const Cycle& cycle);

// Image of the nearby triangle cycle through (infinity, s, t) from a
// braid running from the start fiber to the fiber where s and t meet:
// the over-crossing sums of the braid on s plus those of its inverse on
// t.  `all_labels` is the full line list, infinity line first among its
// peers in arrangement order.
HomologyClass istar_pair_from_braid(const LabeledBraid& to_fiber, const std::vector<std::string>& all_labels,
                                    const std::string& s, const std::string& t);

HomologyClass istar_pair(const WiringDiagram& w, const std::vector<std::string>& all_labels,
                         const std::string& s, const std::string& t);

HomologyClass istar_cycle(const WiringDiagram& w, const std::vector<std::string>& all_labels,
                          const std::string& infinity_label, const LabelCycle& cycle);

struct InvariantResult {
    RootOfUnity value;
    HomologyClass witness;  // defined modulo ker xi
    std::uint64_t seed = 0;
    std::string infinity_label;
    std::string wiring_source;  // "computed" or the wiring file path
};

/**
 * Full pipeline: validates that the triple is inner-cyclic, projects
 * with the lowest-index support line of the cycle at infinity, computes
 * the wiring diagram (re-seeding the frame on residual degeneracies) and
 * evaluates the character on the walked class.
 */
InvariantResult invariant(const Arrangement& a, const Character& xi, const Cycle& gamma,
                          std::uint64_t seed);

// As above with an explicit infinity line (must be in the cycle support).
InvariantResult invariant_with_infinity(const Arrangement& a, const Character& xi, const Cycle& gamma,
                                        const std::string& infinity_label, std::uint64_t seed);

// Computes a wiring diagram for the arrangement, re-seeding frames until
// tracking succeeds.  Helper shared with the CLI.
std::pair<WiringDiagram, ProjectionFrame> wiring_for(const Arrangement& a,
                                                     const std::string& infinity_label,
                                                     std::uint64_t seed);

}  // namespace arrangis
