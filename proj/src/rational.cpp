#include "arrangis/rational.hpp"

#include <ostream>

#include "arrangis/errors.hpp"

namespace arrangis {

Rational::Rational(long n, long d) {
    if (d == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(Integer n, Integer d) {
    if (d == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(std::move(n)) / mpq_class(std::move(d));
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_str();
}

std::string Rational::to_fraction_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw InputError("empty rational literal");
    std::string s(text);
    for (char c : s) {
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw InputError("bad rational literal '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InputError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace arrangis
