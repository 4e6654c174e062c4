#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arrangis/braid.hpp"
#include "arrangis/combinatorics.hpp"

namespace arrangis {

/**
 * Braided wiring diagram: labelled strands and an ordered event stream
 * of braid letters and singular points.  Positions are 1-based, bottom
 * to top.  A singular event of width s occupies s consecutive positions
 * and reverses them (as its half-twist does); braid letters transpose
 * adjacent positions.
 *
 * Text form, one event per line after the header:
 *
 *     # comment
 *     strands 3 labels A B C
 *     b +1 -2
 *     p 2..3 P:B:C
 *
 * Canonical form: no comments, consecutive braid letters merged into a
 * single "b" event, no empty braid events.
 */

struct SingularEvent {
    std::string point_id;
    int lo = 0, hi = 0;  // inclusive position range, hi >= lo + 1

    bool operator==(const SingularEvent&) const = default;
};

using WiringEvent = std::variant<BraidWord, SingularEvent>;

struct WiringDiagram {
    int strands = 0;
    std::vector<std::string> initial_labels;  // index 0 = position 1 (bottom)
    std::vector<WiringEvent> events;          // normalized

    bool operator==(const WiringDiagram&) const = default;

    int singular_count() const;
    const SingularEvent& singular(int index) const;  // 1-based fiber index

    // Strand labels bottom-to-top just after singular event u (u = 0:
    // initial labels) / just after the whole event stream.
    std::vector<std::string> labels_after_fiber(int u) const;
    std::vector<std::string> terminal_labels() const;

    // Labels through a singular event, i.e. on its position range at the
    // moment of the event (order: bottom to top on entry).
    std::vector<std::string> members_of(int index) const;  // 1-based

    // Fiber index of the singular event joining the two strands, or 0
    // when they never meet.
    int fiber_of_pair(const std::string& a, const std::string& b) const;

    // Checks ranges, labels and braid letters; throws InputError.
    void validate() const;
};

// Normalizes the event stream (merges adjacent braid events, drops empty
// ones) — parse and compute produce normalized diagrams already.
void normalize_events(WiringDiagram& w);

struct WiringParseError {
    int line = 0, column = 0;
    std::string message;
};

// Throws InputError carrying "line L, column C: ..." diagnostics.
WiringDiagram parse_wiring(std::string_view text);
std::string print_wiring(const WiringDiagram& w);

/**
 * The braid between two fibers: for u < v the concatenation of the
 * diagram's events after singular u up to singular v, with the singular
 * events strictly between replaced by their positive half-twists; for
 * v < u the inverse.  Entry labels are the strand labels at fiber u on
 * the matching side.
 */
LabeledBraid beta_uv(const WiringDiagram& w, int u, int v);

/**
 * The combinatorics a complete diagram describes, with the infinity
 * line prepended: affine points from the singular events, points at
 * infinity from the parallel classes (strands that never meet share
 * their point with the infinity line).  Validates the axioms.
 */
Combinatorics combinatorics_from_wiring(const WiringDiagram& w, const std::string& infinity_label);

}  // namespace arrangis
