#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "arrangis/depth.hpp"
#include "arrangis/enumerate.hpp"
#include "arrangis/geometry.hpp"
#include "arrangis/invariant.hpp"
#include "arrangis/wiring.hpp"

namespace arrangis {

using Json = nlohmann::ordered_json;

/**
 * File formats.  Arrangements:
 *   {"cyclotomic_order": 3,
 *    "lines": [{"label": "L0", "coeffs": ["0", "0", "1"]}, ...]}
 * where a coefficient is either a rational string or an array of
 * rational strings (power-basis coordinates mod Phi_N).  Characters:
 *   {"order": 3, "exponents": {"L0": "0/1", ...}}
 * Cycles serialize as the alternating label list
 *   ["L0", "P:L0:L3", "L3", ..., "P:L0:L6"]
 * and parse from the comma-separated command-line form, where "*" names
 * the unique point joining the two neighbouring lines.
 */

Arrangement arrangement_from_json(const Json& j);
Json arrangement_to_json(const Arrangement& a);
Arrangement load_arrangement(const std::string& path);

Character character_from_json(const Json& j, const Combinatorics& c);
Json character_to_json(const Combinatorics& c, const Character& xi);
unsigned character_order_bound(const Json& j);

Cycle cycle_from_string(std::string_view text, const Combinatorics& c);
Json cycle_to_json(const Combinatorics& c, const Cycle& cycle);

Json combinatorics_to_json(const Combinatorics& c);
Combinatorics combinatorics_from_json(const Json& j);

Json wiring_to_json(const WiringDiagram& w);
WiringDiagram wiring_from_json(const Json& j);

Json invariant_result_to_json(const InvariantResult& r);
Json depth_report_to_json(const DepthReport& r);
Json inner_cyclic_hits_to_json(const Combinatorics& c, unsigned order,
                               const std::vector<InnerCyclicHit>& hits);

std::string read_file(const std::string& path);

// JSON parse with diagnostics (byte position) folded into InputError.
Json parse_json_text(const std::string& text, const std::string& what);

}  // namespace arrangis
