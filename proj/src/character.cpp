#include "arrangis/character.hpp"

#include <algorithm>

#include "arrangis/errors.hpp"

namespace arrangis {

bool Character::is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](const RootOfUnity& v) { return v.is_one(); });
}

Character Character::inverse() const {
    Character r;
    r.values.reserve(values.size());
    for (const auto& v : values) r.values.push_back(v.inverse());
    return r;
}

Character Character::operator*(const Character& o) const {
    if (values.size() != o.values.size()) throw InputError("character size mismatch");
    Character r;
    r.values.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) r.values.push_back(values[i] * o.values[i]);
    return r;
}

Character Character::trivial(const Combinatorics& c) {
    Character r;
    r.values.assign(c.lines.size(), RootOfUnity());
    return r;
}

Character Character::from_exponents(const Combinatorics& c,
                                    const std::map<std::string, Rational>& exponents) {
    Character r;
    r.values.reserve(c.lines.size());
    Rational total(0);
    for (const auto& label : c.lines) {
        auto it = exponents.find(label);
        if (it == exponents.end()) throw InputError("character misses line " + label);
        r.values.push_back(RootOfUnity::from_exponent(it->second));
        total += r.values.back().exponent();
    }
    if (exponents.size() != c.lines.size())
        throw InputError("character names a line outside the combinatorics");
    if (!total.is_integer())
        throw InputError("character values do not multiply to 1 (exponent sum " +
                         total.to_fraction_string() + ")");
    return r;
}

RootOfUnity point_value(const Combinatorics& c, const Character& xi, int point) {
    if (point < 0 || point >= static_cast<int>(c.points.size())) throw InputError("unknown point");
    RootOfUnity v;
    for (int l : c.points[point]) v = v * xi.value(l);
    return v;
}

InnerCyclicCheck is_inner_cyclic(const Combinatorics& c, const Character& xi, const Cycle& gamma) {
    validate_cycle(c, gamma);
    if (xi.values.size() != c.lines.size()) throw InputError("character size mismatch");
    for (int l : gamma.lines) {
        if (!xi.value(l).is_one())
            return {false, 1, "xi(" + c.lines[l] + ") = " + xi.value(l).to_string() + " != 1"};
    }
    for (int p : gamma.points) {
        for (int l : c.points[p]) {
            if (!xi.value(l).is_one())
                return {false, 2,
                        "line " + c.lines[l] + " through cycle point " + c.point_id(p) + " has xi = " +
                            xi.value(l).to_string()};
        }
    }
    for (int l : gamma.lines) {
        for (int p : c.points_on_line(l)) {
            const RootOfUnity v = point_value(c, xi, p);
            if (!v.is_one())
                return {false, 3,
                        "point " + c.point_id(p) + " on support line " + c.lines[l] + " has xi(p) = " +
                            v.to_string()};
        }
    }
    return {};
}

}  // namespace arrangis
