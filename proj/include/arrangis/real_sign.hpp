#pragma once

#include "arrangis/cyclotomic.hpp"

namespace arrangis {

/**
 * Exact sign determination for real and imaginary parts of cyclotomic
 * numbers.  Zero is decided exactly on the reduced coefficient vector;
 * the sign of a provably nonzero value comes from interval evaluation,
 * first in double precision with a conservative error bound and then
 * with MPFR at doubling precision until the interval excludes zero.
 */

// Sign of Re(z): -1, 0, +1.
int real_part_sign(const CyclotomicNumber& z);

// Sign of Im(z): -1, 0, +1.
int imag_part_sign(const CyclotomicNumber& z);

bool real_part_is_zero(const CyclotomicNumber& z);
bool imag_part_is_zero(const CyclotomicNumber& z);

// Compares Re(a) with Re(b): sign of Re(a - b).
int compare_real_parts(const CyclotomicNumber& a, const CyclotomicNumber& b);

}  // namespace arrangis
