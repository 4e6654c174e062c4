#include "arrangis/tracker.hpp"

#include <algorithm>
#include <map>

#include "arrangis/errors.hpp"
#include "arrangis/real_sign.hpp"

namespace arrangis {

namespace {

/**
 * Diagram orientation.  Position 1 (the bottom strand) is the one with
 * the LARGEST real part, and a positive braid letter is emitted when
 * the strand coming from the upper position has imaginary part of this
 * sign at the crossing instant.  Together these pair the emitted
 * diagram with the positive-half-twist reading of singular events; the
 * orientation pair is pinned by the end-to-end oracles in the test
 * suite, which distinguish a diagram from its mirror image.
 */
constexpr bool kBottomStrandHasLargestRe = true;
constexpr int kPositiveCrossingUpperImSign = +1;

int oriented(int cmp) {
    return kBottomStrandHasLargestRe ? -cmp : cmp;
}

// Twice the real part, as an exact field element; signs and ratios of
// these stand in for signs and ratios of real parts.
CyclotomicNumber reel(const CyclotomicNumber& z) {
    return z + z.conj();
}

struct Strand {
    int line;  // arrangement index
    std::string label;
    CyclotomicNumber slope, icept;
};

struct Segment {
    CyclotomicNumber from, to;
    int start_fiber;  // 1-based fiber index when starting at a singular value, else 0
    int end_fiber;    // likewise for the endpoint
};

struct Crossing {
    CyclotomicNumber t;
    int i, j;  // strand indices
};

}  // namespace

WiringDiagram compute_wiring(const Arrangement& a, const ProjectionFrame& frame) {
    require_valid(a);
    const unsigned order = a.order;
    const Combinatorics c = combinatorics_of(a);

    std::vector<Strand> strands;
    std::vector<int> strand_of_line(a.lines.size(), -1);
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
        if (static_cast<int>(i) == frame.infinity_index) continue;
        const auto& t = frame.transformed[i];
        if (t[1].is_zero()) throw GenericityError("line " + a.lines[i].label + " is vertical in this frame");
        const CyclotomicNumber binv = t[1].inverse();
        strand_of_line[i] = static_cast<int>(strands.size());
        strands.push_back({static_cast<int>(i), a.lines[i].label, -(t[0] * binv), -(t[2] * binv)});
    }
    const int n = static_cast<int>(strands.size());
    if (n < 1) throw InputError("no affine lines in this frame");

    const int k = static_cast<int>(frame.fibers.size());

    // Fibers are entered and left along the real direction: a short real
    // detour around each singular value keeps the direction equal on both
    // sides, which is what makes the block-reversal model of a singular
    // event exact.
    CyclotomicNumber eps = CyclotomicNumber::from_rational(order, Rational(1, 4));
    for (int u = 0; u + 1 < k; ++u) {
        const CyclotomicNumber gap =
            (reel(frame.fibers[u + 1].x) - reel(frame.fibers[u].x)) * Rational(1, 8);
        if (real_part_sign(gap - eps) < 0) eps = gap;
    }

    std::vector<Segment> segments;
    if (k > 0) {
        const CyclotomicNumber a1 = frame.fibers[0].x - eps;
        segments.push_back({frame.start_x, a1, 0, 0});
        for (int u = 0; u < k; ++u) {
            segments.push_back({frame.fibers[u].x - eps, frame.fibers[u].x, 0, u + 1});
            if (u + 1 < k) {
                segments.push_back({frame.fibers[u].x, frame.fibers[u].x + eps, u + 1, 0});
                segments.push_back({frame.fibers[u].x + eps, frame.fibers[u + 1].x - eps, 0, 0});
            }
        }
    }

    // Initial order over the start fiber.
    auto value_at = [&](int s, const CyclotomicNumber& x) {
        return strands[s].slope * x + strands[s].icept;
    };
    std::vector<int> at(n);  // at[pos] = strand index, pos 0 = bottom
    for (int i = 0; i < n; ++i) at[i] = i;
    std::sort(at.begin(), at.end(), [&](int s, int t) {
        const int cmp = compare_real_parts(value_at(s, frame.start_x), value_at(t, frame.start_x));
        if (cmp == 0) throw GenericityError("strands tied over the start fiber");
        return oriented(cmp) < 0;
    });
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[at[p]] = p;

    WiringDiagram w;
    w.strands = n;
    for (int p = 0; p < n; ++p) w.initial_labels.push_back(strands[at[p]].label);

    std::vector<int> pending;  // braid letters of the current slot
    auto member_strands = [&](int fiber) {
        std::vector<int> m;
        for (int line : frame.fibers[fiber - 1].members) m.push_back(strand_of_line[line]);
        return m;
    };

    for (const auto& seg : segments) {
        const CyclotomicNumber d = seg.to - seg.from;
        std::vector<CyclotomicNumber> A(n), B(n);
        for (int s = 0; s < n; ++s) {
            A[s] = value_at(s, seg.from);
            B[s] = strands[s].slope * d;
        }
        auto both_members = [&](int fiber, int i, int j) {
            if (fiber == 0) return false;
            const auto m = member_strands(fiber);
            return std::find(m.begin(), m.end(), i) != m.end() &&
                   std::find(m.begin(), m.end(), j) != m.end();
        };

        std::vector<Crossing> crossings;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const CyclotomicNumber alpha = reel(A[i] - A[j]);
                const CyclotomicNumber beta = reel(B[i] - B[j]);
                if (beta.is_zero()) {
                    if (alpha.is_zero())
                        throw GenericityError("strands " + strands[i].label + " and " + strands[j].label +
                                              " share their real part along a segment");
                    continue;
                }
                const CyclotomicNumber t = -(alpha * beta.inverse());
                const int s0 = real_part_sign(t);
                const int s1 = real_part_sign(t - CyclotomicNumber::one(order));
                if (s0 < 0 || s1 > 0) continue;
                if (s0 == 0) {
                    if (!both_members(seg.start_fiber, i, j))
                        throw GenericityError("strand crossing lands on a path node");
                    continue;  // handled by the singular event
                }
                if (s1 == 0) {
                    if (!both_members(seg.end_fiber, i, j))
                        throw GenericityError("strand crossing lands on a fiber");
                    continue;
                }
                crossings.push_back({t, i, j});
            }
        }
        std::sort(crossings.begin(), crossings.end(), [&](const Crossing& x, const Crossing& y) {
            return real_part_sign(x.t - y.t) < 0;
        });
        for (std::size_t ci = 0; ci < crossings.size(); ++ci) {
            if (ci > 0 && real_part_sign(crossings[ci].t - crossings[ci - 1].t) == 0) {
                const auto& p = crossings[ci - 1];
                const auto& q = crossings[ci];
                if (p.i == q.i || p.i == q.j || p.j == q.i || p.j == q.j)
                    throw GenericityError("three strands share a real part away from a singular fiber");
            }
        }
        // Simultaneous disjoint crossings commute; order them by position.
        std::stable_sort(crossings.begin(), crossings.end(), [&](const Crossing& x, const Crossing& y) {
            const int cmp = real_part_sign(x.t - y.t);
            if (cmp != 0) return cmp < 0;
            return std::min(pos[x.i], pos[x.j]) < std::min(pos[y.i], pos[y.j]);
        });

        for (const auto& cr : crossings) {
            const int pi = pos[cr.i], pj = pos[cr.j];
            if (pi > pj + 1 || pj > pi + 1 || pi == pj)
                throw GenericityError("non-adjacent strand crossing; frame is degenerate");
            const int lower = std::min(pi, pj);
            const int lo_strand = at[lower], up_strand = at[lower + 1];
            const CyclotomicNumber delta =
                (A[up_strand] - A[lo_strand]) + cr.t * (B[up_strand] - B[lo_strand]);
            const int im = imag_part_sign(delta);
            if (im == 0) throw GenericityError("strands collide away from a singular fiber");
            const int letter = lower + 1;
            pending.push_back(im == kPositiveCrossingUpperImSign ? letter : -letter);
            std::swap(at[lower], at[lower + 1]);
            pos[at[lower]] = lower;
            pos[at[lower + 1]] = lower + 1;
        }

        if (seg.end_fiber > 0) {
            const auto m = member_strands(seg.end_fiber);
            int lo = n, hi = -1;
            for (int s : m) {
                lo = std::min(lo, pos[s]);
                hi = std::max(hi, pos[s]);
            }
            if (hi - lo + 1 != static_cast<int>(m.size()))
                throw GenericityError("singular point strands are not consecutive");
            if (!pending.empty()) {
                w.events.emplace_back(BraidWord(n, pending));
                pending.clear();
            }
            const int point = frame.fibers[seg.end_fiber - 1].combinatorics_point;
            w.events.emplace_back(SingularEvent{c.point_id(point), lo + 1, hi + 1});
            std::reverse(at.begin() + lo, at.begin() + hi + 1);
            for (int p = lo; p <= hi; ++p) pos[at[p]] = p;
        }
    }

    normalize_events(w);
    w.validate();
    return w;
}

std::vector<std::string> final_strand_order(const Arrangement& a, const ProjectionFrame& frame) {
    std::vector<std::pair<CyclotomicNumber, CyclotomicNumber>> lines;  // (value at last fiber, slope)
    std::vector<std::string> labels;
    const CyclotomicNumber x_end = frame.fibers.empty() ? frame.start_x : frame.fibers.back().x;
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
        if (static_cast<int>(i) == frame.infinity_index) continue;
        const auto& t = frame.transformed[i];
        const CyclotomicNumber binv = t[1].inverse();
        const CyclotomicNumber slope = -(t[0] * binv);
        const CyclotomicNumber icept = -(t[2] * binv);
        lines.emplace_back(slope * x_end + icept, slope);
        labels.push_back(a.lines[i].label);
    }
    std::vector<int> idx(labels.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    // Strands tied at the last fiber (the point's members) separate along
    // the real direction by their slopes.
    std::sort(idx.begin(), idx.end(), [&](int s, int t) {
        const int c0 = compare_real_parts(lines[s].first, lines[t].first);
        if (c0 != 0) return oriented(c0) < 0;
        const int c1 = compare_real_parts(lines[s].second, lines[t].second);
        if (c1 == 0) throw GenericityError("strands tied beyond the last fiber");
        return oriented(c1) < 0;
    });
    std::vector<std::string> out;
    for (int i : idx) out.push_back(labels[i]);
    return out;
}

}  // namespace arrangis
