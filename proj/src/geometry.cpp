#include "arrangis/geometry.hpp"

#include <algorithm>
#include <map>

#include "arrangis/errors.hpp"

namespace arrangis {

int Arrangement::line_index(const std::string& label) const {
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].label == label) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> Arrangement::labels() const {
    std::vector<std::string> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(l.label);
    return out;
}

namespace {

bool proportional(const std::array<CyclotomicNumber, 3>& a, const std::array<CyclotomicNumber, 3>& b) {
    // a x b = 0 componentwise.
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (!(a[j] * b[k] - a[k] * b[j]).is_zero()) return false;
    }
    return true;
}

struct PointLess {
    bool operator()(const ProjectivePoint& a, const ProjectivePoint& b) const {
        for (int i = 0; i < 3; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

ProjectivePoint normalized(ProjectivePoint p) {
    for (int i = 0; i < 3; ++i) {
        if (!p[i].is_zero()) {
            const CyclotomicNumber inv = p[i].inverse();
            for (int j = 0; j < 3; ++j) p[j] = p[j] * inv;
            return p;
        }
    }
    throw InputError("zero projective point");
}

}  // namespace

void require_valid(const Arrangement& a) {
    if (a.order < 1) throw InputError("arrangement cyclotomic order must be positive");
    std::vector<std::string> seen;
    for (const auto& l : a.lines) {
        if (l.label.empty() || l.label.find_first_of(" \t\n,") != std::string::npos)
            throw InputError("bad line label '" + l.label + "'");
        if (std::find(seen.begin(), seen.end(), l.label) != seen.end())
            throw InputError("duplicate line label " + l.label);
        seen.push_back(l.label);
        bool nonzero = false;
        for (const auto& c : l.coeffs) {
            if (c.order() != a.order) throw InputError("line " + l.label + " has mixed cyclotomic order");
            nonzero = nonzero || !c.is_zero();
        }
        if (!nonzero) throw InputError("line " + l.label + " has zero coefficients");
    }
    for (std::size_t i = 0; i < a.lines.size(); ++i)
        for (std::size_t j = i + 1; j < a.lines.size(); ++j)
            if (proportional(a.lines[i].coeffs, a.lines[j].coeffs))
                throw InputError("lines " + a.lines[i].label + " and " + a.lines[j].label + " coincide");
}

ProjectivePoint intersect(const ProjectiveLine& l1, const ProjectiveLine& l2) {
    if (proportional(l1.coeffs, l2.coeffs)) throw InputError("intersect called on identical lines");
    const auto& a = l1.coeffs;
    const auto& b = l2.coeffs;
    ProjectivePoint p{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    return normalized(p);
}

bool line_contains(const ProjectiveLine& l, const ProjectivePoint& p) {
    return (l.coeffs[0] * p[0] + l.coeffs[1] * p[1] + l.coeffs[2] * p[2]).is_zero();
}

Combinatorics combinatorics_of(const Arrangement& a) {
    require_valid(a);
    const int n = static_cast<int>(a.lines.size());
    Combinatorics c;
    for (const auto& l : a.lines) c.lines.push_back(l.label);

    std::map<ProjectivePoint, int, PointLess> index_of;
    std::vector<std::vector<int>> members;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const ProjectivePoint p = intersect(a.lines[i], a.lines[j]);
            auto [it, inserted] = index_of.emplace(p, static_cast<int>(members.size()));
            if (inserted) members.push_back({i, j});
            else {
                auto& m = members[it->second];
                if (std::find(m.begin(), m.end(), i) == m.end()) m.push_back(i);
                if (std::find(m.begin(), m.end(), j) == m.end()) m.push_back(j);
            }
        }
    }
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        c.points.push_back(std::move(m));
    }
    return c;
}

std::optional<RealizationMismatch> check_realizes(const Arrangement& a, const Combinatorics& c) {
    if (a.lines.size() != c.lines.size()) return RealizationMismatch{"line counts differ"};
    for (std::size_t i = 0; i < c.lines.size(); ++i)
        if (a.lines[i].label != c.lines[i])
            return RealizationMismatch{"line #" + std::to_string(i) + " is labelled " + a.lines[i].label +
                                       " vs " + c.lines[i]};
    Combinatorics got = combinatorics_of(a);
    auto key = [](const Combinatorics& k) {
        std::vector<std::vector<int>> pts = k.points;
        std::sort(pts.begin(), pts.end());
        return pts;
    };
    const auto ka = key(got), kc = key(c);
    if (ka == kc) return std::nullopt;
    // Report the first pair whose point differs.
    for (std::size_t i = 0; i < c.lines.size(); ++i) {
        for (std::size_t j = i + 1; j < c.lines.size(); ++j) {
            const int pa = got.point_through(static_cast<int>(i), static_cast<int>(j));
            const int pc = c.point_through(static_cast<int>(i), static_cast<int>(j));
            const std::vector<int> ma = pa >= 0 ? got.points[pa] : std::vector<int>{};
            const std::vector<int> mc = pc >= 0 ? c.points[pc] : std::vector<int>{};
            if (ma != mc)
                return RealizationMismatch{"pair {" + c.lines[i] + "," + c.lines[j] +
                                           "} lies in different point sets"};
        }
    }
    return RealizationMismatch{"point systems differ"};
}

Arrangement conjugate(const Arrangement& a) {
    Arrangement r = a;
    for (auto& l : r.lines)
        for (auto& c : l.coeffs) c = c.conj();
    return r;
}

}  // namespace arrangis
