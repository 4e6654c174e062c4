#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "arrangis/cyclotomic.hpp"
#include "arrangis/errors.hpp"
#include "arrangis/rational.hpp"
#include "arrangis/real_sign.hpp"
#include "arrangis/root_of_unity.hpp"

using namespace arrangis;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    return Rational(num(rng), den(rng));
}

std::vector<Integer> poly(std::initializer_list<long> cs) {
    std::vector<Integer> out;
    for (long c : cs) out.emplace_back(c);
    return out;
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).sign() == -1);
    CHECK(Rational(2, -4).denominator() == 2);
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(1, 2).to_fraction_string() == "1/2");
    CHECK(Rational(3).to_string() == "3");
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("x"), InputError);
}

TEST_CASE("rational field laws on random inputs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(Rational::parse(a.to_fraction_string()) == a);
    }
}

TEST_CASE("roots of unity form a group under exponent addition") {
    const RootOfUnity half = RootOfUnity::parse("1/2");
    CHECK((half * half).is_one());
    CHECK(half.order() == 2);
    CHECK(RootOfUnity::from_exponent(Rational(5, 3)).exponent() == Rational(2, 3));
    CHECK(RootOfUnity::from_exponent(Rational(-1, 3)).exponent() == Rational(2, 3));
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const RootOfUnity r = RootOfUnity::from_exponent(random_rational(rng));
        CHECK((r * r.inverse()).is_one());
        CHECK(r.exponent() >= Rational(0));
        CHECK(r.exponent() < Rational(1));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
    CHECK(cyclotomic_polynomial(3) == poly({1, 1, 1}));
    // x^6 - 1 divided by Phi_1 Phi_2 Phi_3 by hand: x^2 - x + 1.
    CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
    CHECK(cyclotomic_degree(12) == 4);

    for (unsigned n = 1; n <= 24; ++n) {
        const auto& phi = cyclotomic_polynomial(n);
        std::complex<double> zeta = std::polar(1.0, 2.0 * M_PI / n);
        std::complex<double> acc(0.0, 0.0), power(1.0, 0.0);
        for (const auto& c : phi) {
            acc += c.get_d() * power;
            power *= zeta;
        }
        CHECK(std::abs(acc) < 1e-9);
    }
}

TEST_CASE("embedding roots of unity into cyclotomic fields") {
    CHECK(embed_root(RootOfUnity(), 3) == CyclotomicNumber::one(3));
    CHECK(embed_root(RootOfUnity::parse("1/2"), 2) == CyclotomicNumber::from_rational(2, Rational(-1)));
    // zeta_3^2 = -1 - zeta_3 in the power basis.
    const CyclotomicNumber z32 = embed_root(RootOfUnity::parse("2/3"), 3);
    CHECK(z32 == CyclotomicNumber::from_coeffs(3, {Rational(-1), Rational(-1)}));
    CHECK_THROWS_AS(embed_root(RootOfUnity::parse("1/2"), 3), InputError);

    // The embedding is a homomorphism.
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(0, 11);
    for (int i = 0; i < 100; ++i) {
        const auto r1 = RootOfUnity::from_exponent(Rational(num(rng), 12));
        const auto r2 = RootOfUnity::from_exponent(Rational(num(rng), 12));
        CHECK(embed_root(r1 * r2, 12) == embed_root(r1, 12) * embed_root(r2, 12));
    }
}

TEST_CASE("cyclotomic arithmetic and conjugation") {
    const CyclotomicNumber z = CyclotomicNumber::zeta_power(3, 1);
    CHECK(z * z * z == CyclotomicNumber::one(3));
    CHECK(z.conj() == CyclotomicNumber::zeta_power(3, 2));
    CHECK((z + z.conj()) == CyclotomicNumber::from_rational(3, Rational(-1)));
    CHECK(z.inverse() * z == CyclotomicNumber::one(3));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> small(-4, 4);
    for (int i = 0; i < 100; ++i) {
        CyclotomicNumber a = CyclotomicNumber::zero(12);
        for (int k = 0; k < 4; ++k)
            a = a + CyclotomicNumber::zeta_power(12, k) *
                        CyclotomicNumber::from_rational(12, Rational(small(rng)));
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == CyclotomicNumber::one(12));
        CHECK(a.conj().conj() == a);
        const auto v = a.to_complex();
        const auto w = a.conj().to_complex();
        CHECK(std::abs(v - std::conj(w)) < 1e-9);
    }
}

TEST_CASE("sign determination for real and imaginary parts") {
    const CyclotomicNumber z = CyclotomicNumber::zeta_power(3, 1);  // Re -1/2, Im +sqrt(3)/2
    CHECK(real_part_sign(z) == -1);
    CHECK(imag_part_sign(z) == 1);
    CHECK(imag_part_sign(z.conj()) == -1);
    CHECK(real_part_sign(z + z.conj()) == -1);
    CHECK(imag_part_sign(z + z.conj()) == 0);
    CHECK(real_part_sign(CyclotomicNumber::zero(3)) == 0);
    // zeta_12 - zeta_12^11 is purely imaginary.
    const CyclotomicNumber w = CyclotomicNumber::zeta_power(12, 1) - CyclotomicNumber::zeta_power(12, 11);
    CHECK(real_part_sign(w) == 0);
    CHECK(imag_part_sign(w) == 1);
    // Tiny but nonzero: zeta + conj(zeta) + 1 + 1/10^9 at order 3.
    const CyclotomicNumber tiny = CyclotomicNumber::zeta_power(3, 1) + CyclotomicNumber::zeta_power(3, 2) +
                                  CyclotomicNumber::from_rational(3, Rational(1)) +
                                  CyclotomicNumber::from_rational(3, Rational(1, 1000000000L));
    CHECK(real_part_sign(tiny) == 1);
}

TEST_CASE("corank by exact elimination") {
    CHECK(corank(CyclotomicMatrix::zero(1, 0)) == 0);

    CyclotomicMatrix eye = CyclotomicMatrix::zero(1, 2);
    eye.at(0, 0) = CyclotomicNumber::one(1);
    eye.at(1, 1) = CyclotomicNumber::one(1);
    CHECK(corank(eye) == 0);

    // [[-1,1,1],[1,-1,chi],[1,chi^-1,-1]] with chi = -1 has corank 2.
    CyclotomicMatrix m = CyclotomicMatrix::zero(2, 3);
    auto c2 = [](long v) { return CyclotomicNumber::from_rational(2, Rational(v)); };
    const long rows[3][3] = {{-1, 1, 1}, {1, -1, -1}, {1, -1, -1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = c2(rows[i][j]);
    CHECK(m.is_hermitian());
    CHECK(corank(m) == 2);
    CHECK(corank(m.conjugate_transpose()) == 2);
}

TEST_CASE("corank of hermitian matrices matches the conjugate transpose") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> small(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3;
        CyclotomicMatrix m = CyclotomicMatrix::zero(3, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, i) = CyclotomicNumber::from_rational(3, Rational(small(rng)));
            for (std::size_t j = i + 1; j < n; ++j) {
                CyclotomicNumber v = CyclotomicNumber::zeta_power(3, small(rng) >= 0 ? 1 : 2) *
                                     CyclotomicNumber::from_rational(3, Rational(small(rng)));
                m.at(i, j) = v;
                m.at(j, i) = v.conj();
            }
        }
        CHECK(m.is_hermitian());
        CHECK(corank(m) == corank(m.conjugate_transpose()));
    }
}
