#include "arrangis/invariant.hpp"

#include <algorithm>

#include "arrangis/errors.hpp"

namespace arrangis {

LabelCycle to_label_cycle(const Combinatorics& c, const Cycle& cycle) {
    LabelCycle out;
    for (int l : cycle.lines) out.lines.push_back(c.lines[l]);
    for (int p : cycle.points) {
        std::vector<std::string> members;
        for (int l : c.points[p]) members.push_back(c.lines[l]);
        out.point_members.push_back(std::move(members));
    }
    return out;
}

namespace {

HomologyClass class_from_sums(const std::vector<std::string>& all_labels,
                              const std::map<std::string, int>& sums) {
    std::map<std::string, long long> raw;
    for (const auto& [label, coeff] : sums)
        if (coeff != 0) raw[label] += coeff;
    return HomologyClass(all_labels, raw);
}

}  // namespace

HomologyClass istar_pair_from_braid(const LabeledBraid& to_fiber, const std::vector<std::string>& all_labels,
                                    const std::string& s, const std::string& t) {
    HomologyClass out(all_labels);
    out = out + class_from_sums(all_labels, over_crossing_sums(to_fiber, s));
    out = out + class_from_sums(all_labels, over_crossing_sums(to_fiber.inverse(), t));
    return out;
}

HomologyClass istar_pair(const WiringDiagram& w, const std::vector<std::string>& all_labels,
                         const std::string& s, const std::string& t) {
    const int u = w.fiber_of_pair(s, t);
    if (u == 0) throw InputError("strands " + s + " and " + t + " do not meet in the diagram");
    return istar_pair_from_braid(beta_uv(w, 0, u), all_labels, s, t);
}

HomologyClass istar_cycle(const WiringDiagram& w, const std::vector<std::string>& all_labels,
                          const std::string& infinity_label, const LabelCycle& cycle) {
    const int lines = static_cast<int>(cycle.lines.size());
    if (lines < 3 || static_cast<int>(cycle.point_members.size()) != lines)
        throw InputError("malformed cycle");
    int inf_at = -1;
    for (int i = 0; i < lines; ++i)
        if (cycle.lines[i] == infinity_label) inf_at = i;
    if (inf_at < 0) throw InputError("infinity line " + infinity_label + " is not in the cycle support");

    // Rotate so the infinity line takes index 0: the cycle then visits
    // affine lines 1..r, and the walk starts and ends over the start
    // fiber (the two points adjacent to the infinity line lie on it).
    auto line_at = [&](int i) { return cycle.lines[(inf_at + i) % lines]; };
    auto members_at = [&](int i) { return cycle.point_members[(inf_at + i) % lines]; };
    auto on_infinity = [&](int i) {
        const auto members = members_at(i);
        return std::find(members.begin(), members.end(), infinity_label) != members.end();
    };
    const int r = lines - 1;  // affine support size
    if (!on_infinity(0) || !on_infinity(r))
        throw InputError("cycle points adjacent to the infinity line must lie on it");

    // fiber[q]: where the point joining affine lines q and q+1 sits;
    // fiber[0] and fiber[r] are the start fiber.
    std::vector<int> fiber(r + 1, 0);
    for (int q = 1; q < r; ++q) {
        if (on_infinity(q))
            throw InputError("cycle point between " + line_at(q) + " and " + line_at(q + 1) +
                             " lies on the infinity line");
        const int u = w.fiber_of_pair(line_at(q), line_at(q + 1));
        if (u == 0)
            throw InputError("support pair " + line_at(q) + ", " + line_at(q + 1) +
                             " does not meet in the diagram");
        fiber[q] = u;
    }

    HomologyClass total(all_labels);
    for (int q = 1; q <= r; ++q) {
        const LabeledBraid beta = beta_uv(w, fiber[q - 1], fiber[q]);
        total = total + class_from_sums(all_labels, over_crossing_sums(beta, line_at(q)));
    }
    return total;
}

std::pair<WiringDiagram, ProjectionFrame> wiring_for(const Arrangement& a,
                                                     const std::string& infinity_label,
                                                     std::uint64_t seed) {
    constexpr int kMaxFrameAttempts = 24;
    std::string last_error;
    for (int attempt = 0; attempt < kMaxFrameAttempts; ++attempt) {
        const std::uint64_t sub_seed = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt);
        try {
            ProjectionFrame frame = choose_projection(a, infinity_label, sub_seed);
            WiringDiagram w = compute_wiring(a, frame);
            return {std::move(w), std::move(frame)};
        } catch (const GenericityError& e) {
            last_error = e.what();
        }
    }
    throw GenericityError("no usable frame for infinity line " + infinity_label + " (seed " +
                          std::to_string(seed) + "): " + last_error);
}

InvariantResult invariant_with_infinity(const Arrangement& a, const Character& xi, const Cycle& gamma,
                                        const std::string& infinity_label, std::uint64_t seed) {
    const Combinatorics c = combinatorics_of(a);
    const InnerCyclicCheck check = is_inner_cyclic(c, xi, gamma);
    if (!check.ok)
        throw InputError("triplet is not inner-cyclic (condition " +
                         std::to_string(check.failed_condition) + "): " + check.detail);
    const int inf_line = c.line_index(infinity_label);
    if (inf_line < 0 || std::find(gamma.lines.begin(), gamma.lines.end(), inf_line) == gamma.lines.end())
        throw InputError("infinity line " + infinity_label + " is not in the cycle support");

    auto [w, frame] = wiring_for(a, infinity_label, seed);
    const LabelCycle cycle = to_label_cycle(c, gamma);
    const HomologyClass h = istar_cycle(w, a.labels(), infinity_label, cycle);
    InvariantResult res;
    res.value = evaluate(c, xi, h);
    res.witness = h;
    res.seed = seed;
    res.infinity_label = infinity_label;
    res.wiring_source = "computed";
    return res;
}

InvariantResult invariant(const Arrangement& a, const Character& xi, const Cycle& gamma,
                          std::uint64_t seed) {
    // Deterministic choice: the lowest-index support line goes to infinity.
    const int inf_line = *std::min_element(gamma.lines.begin(), gamma.lines.end());
    return invariant_with_infinity(a, xi, gamma, a.lines[inf_line].label, seed);
}

}  // namespace arrangis
