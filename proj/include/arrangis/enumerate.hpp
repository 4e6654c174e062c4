#pragma once

#include <cstdint>
#include <vector>

#include "arrangis/blowup.hpp"
#include "arrangis/character.hpp"
#include "arrangis/combinatorics.hpp"

namespace arrangis {

/**
 * Exhaustive search for inner-cyclic characters with values in the group
 * generated by zeta_n: a character is kept when the inner unramified
 * subgraph of the blown-up dual graph has positive first Betti number.
 * Candidates are the n^(#L-1) exponent vectors over the first #L-1 lines
 * (the last exponent is forced by the product-1 constraint), visited in
 * lexicographic order; the trivial character is not reported, and a
 * candidate is dropped early when fewer than two lines carry the value
 * 1.  Each hit is paired with the lowest-index
 * fundamental cycle of the deterministic spanning forest, mapped back to
 * the incidence graph.
 *
 * The candidate scan is a data-parallel kernel.  enumerate_inner_cyclic
 * dispatches to an OpenMP implementation that merges per-chunk results
 * back into candidate order, so its output is identical to the serial
 * reference (which stays around for testing and benchmarking).
 */

struct InnerCyclicHit {
    Character xi;
    Cycle witness;

    bool operator==(const InnerCyclicHit&) const = default;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

std::vector<InnerCyclicHit> enumerate_inner_cyclic_serial(const Combinatorics& c, unsigned order,
                                                          std::uint64_t cap = kDefaultEnumerationCap);

std::vector<InnerCyclicHit> enumerate_inner_cyclic_parallel(const Combinatorics& c, unsigned order,
                                                            std::uint64_t cap = kDefaultEnumerationCap);

std::vector<InnerCyclicHit> enumerate_inner_cyclic(const Combinatorics& c, unsigned order,
                                                   std::uint64_t cap = kDefaultEnumerationCap);

// Number of candidate exponent vectors, i.e. order^(#lines - 1);
// throws CapExceededError when it does not fit or exceeds the cap.
std::uint64_t enumeration_candidate_count(const Combinatorics& c, unsigned order, std::uint64_t cap);

}  // namespace arrangis
