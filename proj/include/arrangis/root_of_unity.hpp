#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include "arrangis/rational.hpp"

namespace arrangis {

/**
 * A root of unity stored additively: the value is e^{2*pi*i*exponent} with
 * the exponent a rational kept in [0, 1).  Multiplication of values is
 * addition of exponents mod 1, so every computation with character values
 * stays exact and no cyclotomic order has to be fixed up front.
 */
class RootOfUnity {
public:
    RootOfUnity() = default;  // the unit (exponent 0)
    static RootOfUnity from_exponent(const Rational& e);

    const Rational& exponent() const { return e_; }
    bool is_one() const { return e_.is_zero(); }
    // Multiplicative order: the denominator of the reduced exponent.
    Integer order() const { return e_.denominator(); }

    RootOfUnity inverse() const;
    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity pow(long k) const;

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return a.e_ == b.e_; }
    friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return a.e_ != b.e_; }
    friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) { return a.e_ < b.e_; }

    std::complex<double> to_complex() const;

    std::string to_string() const { return e_.to_fraction_string(); }
    static RootOfUnity parse(std::string_view text);

private:
    Rational e_;  // reduced mod 1, in [0,1)
};

std::ostream& operator<<(std::ostream& os, const RootOfUnity& r);

}  // namespace arrangis
