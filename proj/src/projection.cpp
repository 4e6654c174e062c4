#include "arrangis/projection.hpp"

#include <algorithm>
#include <random>

#include "arrangis/errors.hpp"
#include "arrangis/real_sign.hpp"

namespace arrangis {

namespace {

using Mat3 = std::array<std::array<CyclotomicNumber, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    const unsigned order = a[0][0].order();
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CyclotomicNumber acc = CyclotomicNumber::zero(order);
            for (int k = 0; k < 3; ++k) acc = acc + a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

CyclotomicNumber det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 inverse3(const Mat3& m) {
    const CyclotomicNumber d = det3(m);
    if (d.is_zero()) throw std::logic_error("singular coordinate change");
    const CyclotomicNumber di = d.inverse();
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            // Adjugate: cofactor of (j,i).
            r[i][j] = (m[j1][i1] * m[j2][i2] - m[j1][i2] * m[j2][i1]) * di;
        }
    }
    return r;
}

Mat3 identity3(unsigned order) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = (i == j) ? CyclotomicNumber::one(order) : CyclotomicNumber::zero(order);
    return m;
}

// Base change whose third row is the infinity line's form; the other two
// rows are the remaining standard coordinate forms, in order.
Mat3 base_change(const Arrangement& a, int infinity) {
    const auto& form = a.lines[infinity].coeffs;
    int pivot = 0;
    while (form[pivot].is_zero()) ++pivot;
    Mat3 m = identity3(a.order);
    int row = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == pivot) continue;
        for (int j = 0; j < 3; ++j)
            m[row][j] = (j == i) ? CyclotomicNumber::one(a.order) : CyclotomicNumber::zero(a.order);
        ++row;
    }
    for (int j = 0; j < 3; ++j) m[2][j] = form[j];
    return m;
}

// Small field element from the deterministic parameter stream: an
// integer in [-6,6], plus a zeta-multiple when the field is complex.
CyclotomicNumber draw_parameter(std::mt19937_64& rng, unsigned order) {
    std::uniform_int_distribution<long> small(-6, 6);
    CyclotomicNumber p = CyclotomicNumber::from_rational(order, Rational(small(rng)));
    if (cyclotomic_degree(order) >= 2) {
        const long b = small(rng);
        if (b != 0)
            p = p + CyclotomicNumber::zeta_power(order, 1) * CyclotomicNumber::from_rational(order, Rational(b));
    }
    return p;
}

struct FrameCheck {
    bool ok = false;
    std::vector<AffinePoint> fibers;
    CyclotomicNumber start_x;
};

FrameCheck certify(const Arrangement& a, const Combinatorics& c, int infinity,
                   const std::vector<std::array<CyclotomicNumber, 3>>& lines) {
    FrameCheck out;
    const unsigned order = a.order;

    // No affine line may be vertical (zero y-coefficient).
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (static_cast<int>(i) == infinity) continue;
        if (lines[i][1].is_zero()) return out;
    }
    // Parallel affine lines must separate horizontally: equal slopes with
    // intercepts differing only imaginarily would pin two strands to one
    // height forever.
    std::vector<CyclotomicNumber> slope(lines.size(), CyclotomicNumber::zero(order));
    std::vector<CyclotomicNumber> icept(lines.size(), CyclotomicNumber::zero(order));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (static_cast<int>(i) == infinity) continue;
        const CyclotomicNumber binv = lines[i][1].inverse();
        slope[i] = -(lines[i][0] * binv);
        icept[i] = -(lines[i][2] * binv);
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (static_cast<int>(i) == infinity) continue;
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (static_cast<int>(j) == infinity) continue;
            if (slope[i] == slope[j] && real_part_sign(icept[i] - icept[j]) == 0) return out;
        }
    }

    // Affine multiple points in distinct fibers with distinct Re(x).
    for (std::size_t p = 0; p < c.points.size(); ++p) {
        const auto& m = c.points[p];
        if (std::binary_search(m.begin(), m.end(), infinity)) continue;
        const int la = m[0], lb = m[1];
        // Solve the two affine equations in the new chart.
        const CyclotomicNumber den = slope[la] - slope[lb];
        if (den.is_zero()) return out;  // members parallel in the chart: point escaped to infinity
        const CyclotomicNumber x = (icept[lb] - icept[la]) * den.inverse();
        const CyclotomicNumber y = slope[la] * x + icept[la];
        out.fibers.push_back({m, x, y, static_cast<int>(p)});
    }
    for (std::size_t i = 0; i < out.fibers.size(); ++i)
        for (std::size_t j = i + 1; j < out.fibers.size(); ++j)
            if (compare_real_parts(out.fibers[i].x, out.fibers[j].x) == 0) return out;
    std::sort(out.fibers.begin(), out.fibers.end(), [](const AffinePoint& p, const AffinePoint& q) {
        return compare_real_parts(p.x, q.x) < 0;
    });

    // Start fiber strictly left of everything: left of each singular
    // fiber, and left of every real-axis value where two strand heights
    // cross, so that over the start fiber the strands are already in
    // their asymptotic order and the walk closes through the infinity
    // tube without meeting further crossings.
    CyclotomicNumber min_re = CyclotomicNumber::zero(order);
    bool have = false;
    auto lower_to = [&](const CyclotomicNumber& re_value) {
        if (!have || real_part_sign(re_value - min_re) < 0) {
            min_re = re_value;
            have = true;
        }
    };
    for (const auto& p : out.fibers) lower_to((p.x + p.x.conj()) * Rational(1, 2));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (static_cast<int>(i) == infinity) continue;
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (static_cast<int>(j) == infinity) continue;
            // Heights along the real axis: Re(m) x + Re(q).
            const CyclotomicNumber beta = (slope[i] - slope[j]) + (slope[i] - slope[j]).conj();
            if (beta.is_zero()) continue;
            const CyclotomicNumber alpha = (icept[i] - icept[j]) + (icept[i] - icept[j]).conj();
            lower_to(-(alpha * beta.inverse()));
        }
    }
    out.start_x = min_re - CyclotomicNumber::one(order);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (static_cast<int>(i) == infinity) continue;
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (static_cast<int>(j) == infinity) continue;
            const CyclotomicNumber yi = slope[i] * out.start_x + icept[i];
            const CyclotomicNumber yj = slope[j] * out.start_x + icept[j];
            if (compare_real_parts(yi, yj) == 0) return out;
        }
    }
    out.ok = true;
    return out;
}

}  // namespace

ProjectionFrame choose_projection(const Arrangement& a, const std::string& infinity_label,
                                  std::uint64_t seed, int max_retries) {
    require_valid(a);
    const int infinity = a.line_index(infinity_label);
    if (infinity < 0) throw InputError("infinity line " + infinity_label + " is not in the arrangement");
    const Combinatorics c = combinatorics_of(a);
    const Mat3 base = base_change(a, infinity);
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Mat3 shear = identity3(a.order);
        if (attempt > 0) {
            // x -> x + p*(y + q*x), y -> y + q*x: unimodular, fixes z.
            const CyclotomicNumber p = draw_parameter(rng, a.order);
            const CyclotomicNumber q = draw_parameter(rng, a.order);
            shear[0][0] = CyclotomicNumber::one(a.order) + p * q;
            shear[0][1] = p;
            shear[1][0] = q;
        }
        const Mat3 m = mat_mul(shear, base);
        const Mat3 minv = inverse3(m);
        std::vector<std::array<CyclotomicNumber, 3>> transformed(a.lines.size());
        for (std::size_t i = 0; i < a.lines.size(); ++i) {
            for (int j = 0; j < 3; ++j) {
                CyclotomicNumber acc = CyclotomicNumber::zero(a.order);
                for (int k = 0; k < 3; ++k) acc = acc + a.lines[i].coeffs[k] * minv[k][j];
                transformed[i][j] = acc;
            }
        }
        FrameCheck check = certify(a, c, infinity, transformed);
        if (!check.ok) continue;
        ProjectionFrame frame;
        frame.infinity_index = infinity;
        frame.matrix = m;
        frame.transformed = std::move(transformed);
        frame.fibers = std::move(check.fibers);
        frame.start_x = std::move(check.start_x);
        frame.attempts_used = attempt;
        frame.seed = seed;
        return frame;
    }
    throw GenericityError("no generic projection for infinity line " + infinity_label + " within " +
                          std::to_string(max_retries) + " attempts (seed " + std::to_string(seed) + ")");
}

bool certificate_holds(const Arrangement& a, const ProjectionFrame& frame) {
    const Combinatorics c = combinatorics_of(a);
    return certify(a, c, frame.infinity_index, frame.transformed).ok;
}

}  // namespace arrangis
