#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "arrangis/rational.hpp"
#include "arrangis/root_of_unity.hpp"

namespace arrangis {

class RootOfUnity;

/**
 * Exact arithmetic in the cyclotomic field Q(zeta_N), modelled as
 * Q[x]/Phi_N(x) with x mapped to zeta_N = e^{2*pi*i/N}.  Elements are
 * coefficient vectors of length phi(N) = deg Phi_N in the power basis
 * 1, zeta, ..., zeta^{phi(N)-1}, always reduced mod Phi_N, so equality
 * of vectors is equality of field elements.
 */

// Phi_N with exact integer coefficients (ascending degree), computed by
// dividing x^N - 1 by Phi_d over all proper divisors d of N.  Cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

// Euler phi via the degree of Phi_N.
unsigned cyclotomic_degree(unsigned n);

class CyclotomicNumber {
public:
    CyclotomicNumber() : order_(1), c_(1) {}
    static CyclotomicNumber zero(unsigned order);
    static CyclotomicNumber one(unsigned order);
    static CyclotomicNumber from_rational(unsigned order, const Rational& q);
    static CyclotomicNumber zeta_power(unsigned order, long k);
    // From power-basis coefficients; shorter vectors are zero-padded,
    // longer ones (up to degree N-1) are reduced mod Phi_N.
    static CyclotomicNumber from_coeffs(unsigned order, std::vector<Rational> coeffs);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Valid only when is_rational().
    Rational rational_value() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const Rational& q) const;
    CyclotomicNumber inverse() const;
    CyclotomicNumber operator/(const CyclotomicNumber& o) const { return *this * o.inverse(); }

    // Galois conjugation zeta -> zeta^{-1} (complex conjugation).
    CyclotomicNumber conj() const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }
    // Lexicographic on (order, coefficients); a total order usable as a map key.
    friend bool operator<(const CyclotomicNumber& a, const CyclotomicNumber& b);

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    unsigned order_;
    std::vector<Rational> c_;  // size cyclotomic_degree(order_)
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z);

// zeta_N^k for a root of unity with exponent k/N'; requires N' | N.
CyclotomicNumber embed_root(const RootOfUnity& r, unsigned order);

/**
 * Square matrix over Q(zeta_N) with labelled rows/columns.  The depth
 * pipeline produces matrices that are hermitian for zeta -> zeta^{-1}.
 */
struct CyclotomicMatrix {
    unsigned order = 1;
    std::size_t size = 0;
    std::vector<std::string> labels;          // row i and column i share labels[i]
    std::vector<CyclotomicNumber> entries;    // row-major, size*size

    const CyclotomicNumber& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
    CyclotomicNumber& at(std::size_t i, std::size_t j) { return entries[i * size + j]; }

    static CyclotomicMatrix zero(unsigned order, std::size_t size);
    CyclotomicMatrix conjugate_transpose() const;
    bool is_hermitian() const;
};

// Rank by exact Gaussian elimination; the pivot in each column is the first
// nonzero entry among the remaining rows.
std::size_t rank(CyclotomicMatrix m);
std::size_t corank(const CyclotomicMatrix& m);

}  // namespace arrangis
