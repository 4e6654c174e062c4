#include "arrangis/root_of_unity.hpp"

#include <cmath>
#include <ostream>

namespace arrangis {

namespace {

Rational mod_one(const Rational& e) {
    // e - floor(e): subtract the integral part, then shift into [0,1).
    Integer num = e.numerator();
    Integer den = e.denominator();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Rational(r, den);
}

}  // namespace

RootOfUnity RootOfUnity::from_exponent(const Rational& e) {
    RootOfUnity r;
    r.e_ = mod_one(e);
    return r;
}

RootOfUnity RootOfUnity::inverse() const {
    return from_exponent(-e_);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    return from_exponent(e_ + o.e_);
}

RootOfUnity RootOfUnity::pow(long k) const {
    return from_exponent(e_ * Rational(k));
}

std::complex<double> RootOfUnity::to_complex() const {
    const double a = 2.0 * M_PI * e_.to_double();
    return {std::cos(a), std::sin(a)};
}

RootOfUnity RootOfUnity::parse(std::string_view text) {
    return from_exponent(Rational::parse(text));
}

std::ostream& operator<<(std::ostream& os, const RootOfUnity& r) {
    return os << r.to_string();
}

}  // namespace arrangis
