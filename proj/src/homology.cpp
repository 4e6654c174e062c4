#include "arrangis/homology.hpp"

#include <algorithm>

#include "arrangis/errors.hpp"

namespace arrangis {

HomologyClass::HomologyClass(std::vector<std::string> all_labels)
    : labels_(std::move(all_labels)), coeffs_(labels_.size(), 0) {
    if (labels_.empty()) throw InputError("homology class needs a line basis");
}

HomologyClass::HomologyClass(std::vector<std::string> all_labels,
                             const std::map<std::string, long long>& raw)
    : HomologyClass(std::move(all_labels)) {
    for (const auto& [label, coeff] : raw) {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw InputError("homology coefficient on unknown line " + label);
        coeffs_[it - labels_.begin()] = coeff;
    }
    // v_0 = -(v_1 + ... + v_n)
    const long long head = coeffs_[0];
    if (head != 0) {
        coeffs_[0] = 0;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) coeffs_[i] -= head;
    }
}

long long HomologyClass::coefficient(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw InputError("unknown line " + label);
    return coeffs_[it - labels_.begin()];
}

bool HomologyClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c == 0; });
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
    if (labels_ != o.labels_) throw InputError("homology classes over different bases");
    HomologyClass r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

HomologyClass HomologyClass::operator-() const {
    HomologyClass r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::vector<std::pair<std::string, long long>> HomologyClass::support() const {
    std::vector<std::pair<std::string, long long>> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(labels_[i], coeffs_[i]);
    return out;
}

RootOfUnity evaluate(const Combinatorics& c, const Character& xi, const HomologyClass& h) {
    if (xi.values.size() != c.lines.size()) throw InputError("character size mismatch");
    Rational total(0);
    for (const auto& [label, coeff] : h.support()) {
        const int line = c.line_index(label);
        if (line < 0) throw InputError("homology class names unknown line " + label);
        total += xi.value(line).exponent() * Rational(coeff);
    }
    return RootOfUnity::from_exponent(total);
}

}  // namespace arrangis
