#include "arrangis/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "arrangis/errors.hpp"

namespace arrangis {

namespace {

// --- integer polynomial helpers (ascending coefficients) ---

void ztrim(std::vector<Integer>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisor must be monic and
// must divide evenly (both hold for cyclotomic factors of x^N - 1).
std::vector<Integer> zdiv_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    ztrim(num);
    if (num.size() < den.size()) throw std::logic_error("zdiv_exact: degree underflow");
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Integer& c : num)
        if (c != 0) throw std::logic_error("zdiv_exact: nonzero remainder");
    ztrim(q);
    return q;
}

// --- rational polynomial helpers ---

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qtrim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

// Remainder of a by b (b nonzero), standard long division over Q.
QPoly qmod(QPoly a, const QPoly& b) {
    qtrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        qtrim(a);
    }
    return a;
}

QPoly qdiv(QPoly a, const QPoly& b, QPoly* rem = nullptr) {
    qtrim(a);
    QPoly q;
    if (a.size() >= b.size() && !a.empty()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        qtrim(a);
    }
    if (rem) *rem = a;
    qtrim(q);
    return q;
}

const std::vector<Integer>& phi_poly(unsigned n);

QPoly phi_as_qpoly(unsigned n) {
    const auto& z = phi_poly(n);
    QPoly p(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) p[i] = Rational(z[i], Integer(1));
    return p;
}

const std::vector<Integer>& phi_poly(unsigned n) {
    static std::map<unsigned, std::vector<Integer>> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<Integer>&(unsigned)> get = [&](unsigned m) -> const std::vector<Integer>& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        // x^m - 1
        std::vector<Integer> num(m + 1, Integer(0));
        num[0] = -1;
        num[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            num = zdiv_exact(std::move(num), get(d));
        }
        return cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw InputError("cyclotomic order must be positive");
    return phi_poly(n);
}

unsigned cyclotomic_degree(unsigned n) {
    return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1);
}

CyclotomicNumber CyclotomicNumber::zero(unsigned order) {
    CyclotomicNumber z;
    z.order_ = order;
    z.c_.assign(cyclotomic_degree(order), Rational(0));
    return z;
}

CyclotomicNumber CyclotomicNumber::one(unsigned order) {
    return from_rational(order, Rational(1));
}

CyclotomicNumber CyclotomicNumber::from_rational(unsigned order, const Rational& q) {
    CyclotomicNumber z = zero(order);
    z.c_[0] = q;
    return z;
}

CyclotomicNumber CyclotomicNumber::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
    const unsigned deg = cyclotomic_degree(order);
    QPoly p = std::move(coeffs);
    qtrim(p);
    if (p.size() > deg) p = qmod(std::move(p), phi_as_qpoly(order));
    p.resize(deg, Rational(0));
    CyclotomicNumber z;
    z.order_ = order;
    z.c_ = std::move(p);
    return z;
}

CyclotomicNumber CyclotomicNumber::zeta_power(unsigned order, long k) {
    long r = k % static_cast<long>(order);
    if (r < 0) r += order;
    std::vector<Rational> p(static_cast<std::size_t>(r) + 1, Rational(0));
    p.back() = Rational(1);
    return from_coeffs(order, std::move(p));
}

bool CyclotomicNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("not a rational element");
    return c_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    if (order_ != o.order_) throw InputError("cyclotomic order mismatch");
    CyclotomicNumber r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    if (order_ != o.order_) throw InputError("cyclotomic order mismatch");
    return from_coeffs(order_, qmul(c_, o.c_));
}

CyclotomicNumber CyclotomicNumber::operator*(const Rational& q) const {
    CyclotomicNumber r = *this;
    for (auto& c : r.c_) c *= q;
    return r;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw InputError("inverse of zero cyclotomic number");
    if (is_rational()) return from_rational(order_, Rational(1) / c_[0]);
    // Extended Euclid with Phi_N: u*f + v*Phi = gcd; Phi_N is irreducible
    // over Q so the gcd is a nonzero constant.
    QPoly f = c_;
    qtrim(f);
    QPoly g = phi_as_qpoly(order_);
    QPoly u0{Rational(1)}, u1{};
    QPoly a = f, b = g;
    while (!b.empty()) {
        QPoly rem;
        QPoly q = qdiv(a, b, &rem);
        QPoly u2 = qsub(u0, qmul(q, u1));
        a = std::move(b);
        b = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (a.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not constant");
    const Rational inv_gcd = Rational(1) / a[0];
    for (auto& q : u0) q *= inv_gcd;
    return from_coeffs(order_, std::move(u0));
}

CyclotomicNumber CyclotomicNumber::conj() const {
    // zeta^k |-> zeta^{(N-k) mod N}, then reduce.
    std::vector<Rational> p(order_, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        const std::size_t e = (k == 0) ? 0 : order_ - k;
        p[e] += c_[k];
    }
    return from_coeffs(order_, std::move(p));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
}

bool operator<(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

std::complex<double> CyclotomicNumber::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        const double a = 2.0 * M_PI * static_cast<double>(k) / order_;
        acc += c_[k].to_double() * std::complex<double>(std::cos(a), std::sin(a));
    }
    return acc;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << "]@" << order_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) {
    return os << z.to_string();
}

CyclotomicNumber embed_root(const RootOfUnity& r, unsigned order) {
    const Integer n = r.exponent().denominator();
    if (!n.fits_ulong_p() || order % n.get_ui() != 0)
        throw InputError("root of unity order " + n.get_str() + " does not divide " + std::to_string(order));
    // exponent k/n  ->  zeta_N^{k * N/n}
    const unsigned long nn = n.get_ui();
    const unsigned long kk = r.exponent().numerator().get_ui();  // in [0, n)
    return CyclotomicNumber::zeta_power(order, static_cast<long>(kk * (order / nn)));
}

CyclotomicMatrix CyclotomicMatrix::zero(unsigned order, std::size_t size) {
    CyclotomicMatrix m;
    m.order = order;
    m.size = size;
    m.labels.assign(size, "");
    m.entries.assign(size * size, CyclotomicNumber::zero(order));
    return m;
}

CyclotomicMatrix CyclotomicMatrix::conjugate_transpose() const {
    CyclotomicMatrix m = *this;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m.at(i, j) = at(j, i).conj();
    return m;
}

bool CyclotomicMatrix::is_hermitian() const {
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i; j < size; ++j)
            if (at(i, j) != at(j, i).conj()) return false;
    return true;
}

std::size_t rank(CyclotomicMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.size && r < m.size; ++col) {
        std::size_t pivot = m.size;
        for (std::size_t row = r; row < m.size; ++row) {
            if (!m.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot == m.size) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < m.size; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        }
        const CyclotomicNumber inv = m.at(r, col).inverse();
        for (std::size_t row = r + 1; row < m.size; ++row) {
            if (m.at(row, col).is_zero()) continue;
            const CyclotomicNumber f = m.at(row, col) * inv;
            for (std::size_t j = col; j < m.size; ++j)
                m.at(row, j) = m.at(row, j) - f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t corank(const CyclotomicMatrix& m) {
    return m.size - rank(m);
}

}  // namespace arrangis
