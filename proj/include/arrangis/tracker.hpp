#pragma once

#include "arrangis/projection.hpp"
#include "arrangis/wiring.hpp"

namespace arrangis {

/**
 * Computes the braided wiring diagram of an arrangement over a generic
 * frame: the path through the singular fibers is piecewise linear from
 * a real start value left of everything, strands are the affine lines
 * over it, braid letters are emitted where adjacent strands exchange
 * their real parts, and each multiple point becomes a singular event on
 * its (contiguous) positions.  Everything is linear in the path
 * parameter, so crossing times and orderings are decided exactly; a
 * residual degeneracy (strands tied along a segment, three strands
 * sharing a real part, a crossing landing on a fiber) raises
 * GenericityError so the caller can re-seed the frame.
 */
WiringDiagram compute_wiring(const Arrangement& a, const ProjectionFrame& frame);

// Real-part order of the strands over the end of the diagram, bottom to
// top, from the frame's exact data (used to cross-check bookkeeping).
std::vector<std::string> final_strand_order(const Arrangement& a, const ProjectionFrame& frame);

}  // namespace arrangis
