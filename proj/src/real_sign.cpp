#include "arrangis/real_sign.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace arrangis {

namespace {

// Sign of sum_k c_k * trig(2*pi*k/N) for a sum known to be nonzero.
// use_sin=false evaluates the value of a conjugation-symmetric element
// (a real number); use_sin=true evaluates Im of an antisymmetric one.
int trig_sum_sign(unsigned order, const std::vector<Rational>& coeffs, bool use_sin) {
    // Double-precision pre-filter.
    {
        double acc = 0.0, scale = 0.0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            const double c = coeffs[k].to_double();
            const double a = 2.0 * M_PI * static_cast<double>(k) / order;
            acc += c * (use_sin ? std::sin(a) : std::cos(a));
            scale += std::fabs(c) + 1.0;
        }
        const double bound = scale * 1e-12;
        if (std::fabs(acc) > bound) return acc > 0 ? 1 : -1;
    }

    for (mpfr_prec_t prec = 128; prec <= (1 << 16); prec *= 2) {
        mpfr_t acc, term, ang, pi, cscale;
        mpfr_inits2(prec, acc, term, ang, pi, cscale, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_zero(acc, 1);
        mpfr_set_zero(cscale, 1);
        mpfr_const_pi(pi, MPFR_RNDN);
        std::size_t terms = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            ++terms;
            mpfr_mul_ui(ang, pi, 2 * static_cast<unsigned long>(k), MPFR_RNDN);
            mpfr_div_ui(ang, ang, order, MPFR_RNDN);
            if (use_sin)
                mpfr_sin(term, ang, MPFR_RNDN);
            else
                mpfr_cos(term, ang, MPFR_RNDN);
            mpfr_mul_q(term, term, coeffs[k].raw().get_mpq_t(), MPFR_RNDN);
            mpfr_add(acc, acc, term, MPFR_RNDN);
            mpfr_abs(term, term, MPFR_RNDN);
            mpfr_add(cscale, cscale, term, MPFR_RNDN);
        }
        // Generous bound on accumulated rounding: each of the O(terms)
        // operations contributes at most a few ulps of the running scale.
        mpfr_t eps;
        mpfr_init2(eps, prec);
        mpfr_add_ui(eps, cscale, 1, MPFR_RNDU);
        mpfr_mul_ui(eps, eps, 16 * (static_cast<unsigned long>(terms) + 1), MPFR_RNDU);
        mpfr_mul_2si(eps, eps, 1 - static_cast<long>(prec), MPFR_RNDU);
        const bool decided = mpfr_cmpabs(acc, eps) > 0;
        const int s = mpfr_sgn(acc);
        mpfr_clears(acc, term, ang, pi, cscale, eps, static_cast<mpfr_ptr>(nullptr));
        if (decided) return s > 0 ? 1 : -1;
    }
    throw std::logic_error("sign determination did not converge");
}

}  // namespace

bool real_part_is_zero(const CyclotomicNumber& z) {
    return (z + z.conj()).is_zero();
}

bool imag_part_is_zero(const CyclotomicNumber& z) {
    return (z - z.conj()).is_zero();
}

int real_part_sign(const CyclotomicNumber& z) {
    const CyclotomicNumber twice_re = z + z.conj();
    if (twice_re.is_zero()) return 0;
    if (twice_re.is_rational()) return twice_re.rational_value().sign();
    return trig_sum_sign(twice_re.order(), twice_re.coeffs(), /*use_sin=*/false);
}

int imag_part_sign(const CyclotomicNumber& z) {
    const CyclotomicNumber twice_i_im = z - z.conj();
    if (twice_i_im.is_zero()) return 0;
    return trig_sum_sign(twice_i_im.order(), twice_i_im.coeffs(), /*use_sin=*/true);
}

int compare_real_parts(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return real_part_sign(a - b);
}

}  // namespace arrangis
