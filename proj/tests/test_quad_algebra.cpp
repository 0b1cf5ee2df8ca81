// Copyright 2026 cvgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "cvgate/power_sum.hpp"
#include "cvgate/quad_poly.hpp"

using namespace cvgate;

namespace {

const Coeff I = Coeff::i_unit();
const Coeff HBAR = Coeff::hbar_pow(1);

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST(Coeff, HbarArithmetic) {
    Coeff h2 = HBAR * HBAR;
    EXPECT_EQ(h2, Coeff::hbar_pow(2));
    EXPECT_EQ(Coeff::sigma_pow(2), Coeff(2) * HBAR);
    EXPECT_NEAR(Coeff::sigma_pow(3).eval_real(0.5), 1.0, 1e-15);
    EXPECT_EQ((I * I), Coeff(-1));
    EXPECT_EQ(HBAR.divided_by(HBAR), Coeff(1));
    EXPECT_EQ(Coeff::hbar_pow(-1) * HBAR, Coeff(1));
}

TEST(Coeff, RationalParsingAndFormatting) {
    EXPECT_EQ(rational_from_string("0.25"), q(1, 4));
    EXPECT_EQ(rational_from_string("-3/6"), q(-1, 2));
    EXPECT_EQ(rational_from_string("1e-3"), q(1, 1000));
    EXPECT_EQ(rational_from_string("2.5E2"), q(250));
    EXPECT_THROW(rational_from_string("abc"), std::invalid_argument);
    EXPECT_EQ(rational_short(q(1, 2)), "1/2");
    EXPECT_EQ(rational_short(q(1, 3)), "1/3");
    EXPECT_EQ(rational_short(q(1, 1000)), "0.001");
    EXPECT_EQ(rational_approx(0.75), q(3, 4));
    EXPECT_EQ(rational_approx(-1.0 / 3.0), q(-1, 3));
}

TEST(QuadPoly, CanonicalCommutator) {
    QuadPoly x = QuadPoly::x(0), p = QuadPoly::p(0);
    EXPECT_EQ(commutator(x, p), QuadPoly(I * HBAR));
    EXPECT_EQ(commutator(p, x), QuadPoly(-(I * HBAR)));
    EXPECT_TRUE(commutator(QuadPoly::x(0), QuadPoly::p(1)).is_zero());
    EXPECT_TRUE(commutator(QuadPoly::x(0), QuadPoly::x(1)).is_zero());
}

TEST(QuadPoly, CubicQuadraticCommutator) {
    // [x^3, p^2] = 3 i hbar sym(x^2 p)
    QuadPoly lhs = commutator(QuadPoly::x(0, 3), QuadPoly::p(0, 2));
    QuadMonomial x2p = QuadMonomial::from_powers({{0, 2, 1}});
    QuadPoly rhs = QuadPoly::sym(x2p, Coeff(3) * I * HBAR);
    EXPECT_EQ(lhs, rhs);
}

TEST(QuadPoly, SymmetrizedNormalForm) {
    // sym(x p) = xp + px = 2xp - i hbar
    QuadPoly s = QuadPoly::sym(QuadMonomial::from_powers({{0, 1, 1}}));
    QuadPoly expect = QuadPoly(QuadMonomial::from_powers({{0, 1, 1}}), Coeff(2)) - QuadPoly(I * HBAR);
    EXPECT_EQ(s.normal(), expect);
    EXPECT_TRUE(s.is_hermitian());
    EXPECT_FALSE(QuadPoly(QuadMonomial::from_powers({{0, 1, 1}})).is_hermitian());
    // display form round-trips
    QuadPoly m = QuadPoly(QuadMonomial::from_powers({{0, 2, 3}}), Coeff(5));
    EXPECT_EQ(m.symmetrized(), m);
}

TEST(QuadPoly, AntisymmetryAndJacobi) {
    QuadPoly a = QuadPoly::x(0, 2) + QuadPoly::p(1) * Coeff(3);
    QuadPoly b = QuadPoly::p(0, 2) * QuadPoly::x(1);
    QuadPoly c = QuadPoly::x(0) * QuadPoly::p(0) + QuadPoly::p(1, 2);
    EXPECT_EQ(commutator(a, b), -commutator(b, a));
    QuadPoly j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                 commutator(c, commutator(a, b));
    EXPECT_TRUE(j.normal().is_zero());
}

TEST(QuadPoly, FourierFourthPowerIsIdentity) {
    QuadPoly poly = QuadPoly::x(0, 3) * QuadPoly::p(0) + QuadPoly::x(1) * Coeff(2);
    QuadPoly f = poly;
    for (int k = 0; k < 4; ++k) f = fourier_conjugate(f, 0);
    EXPECT_EQ(f, poly);
    EXPECT_EQ(fourier_conjugate(QuadPoly::x(0), 0), -QuadPoly::p(0));
    EXPECT_EQ(fourier_conjugate(QuadPoly::p(0), 0), QuadPoly::x(0));
    EXPECT_THROW(fourier_conjugate(poly, 2, 2), std::out_of_range);
    EXPECT_THROW(fourier_conjugate(poly, -1), std::out_of_range);
}

TEST(QuadPoly, SubstitutionIsHomomorphism) {
    // shear x0 -> x0 + 2 x1, p1 -> p1 - 2 p0 preserves [x0, p0]
    std::map<int, QuadPoly> xi{{0, QuadPoly::x(0) + QuadPoly::x(1) * Coeff(2)}};
    std::map<int, QuadPoly> pi{{1, QuadPoly::p(1) - QuadPoly::p(0) * Coeff(2)}};
    QuadPoly a = QuadPoly::x(0) * QuadPoly::p(0);
    QuadPoly b = QuadPoly::x(0, 2) * QuadPoly::p(1);
    EXPECT_EQ(substitute(commutator(a, b), xi, pi), commutator(substitute(a, xi, pi), substitute(b, xi, pi)));
}

TEST(QuadPoly, DerivativeX) {
    QuadPoly f = QuadPoly::x(0, 3) * QuadPoly::x(1) * Coeff(2);
    EXPECT_EQ(derivative_x(f, 0), QuadPoly::x(0, 2) * QuadPoly::x(1) * Coeff(6));
    EXPECT_EQ(derivative_x(f, 1), QuadPoly::x(0, 3) * Coeff(2));
}

TEST(PowerSum, RoundTripAllSmallExponents) {
    for (int total = 2; total <= 8; ++total) {
        for (int a = 1; a < total; ++a) {
            std::vector<int> e{a, total - a};
            QuadPoly target = QuadPoly::x(0, a) * QuadPoly::x(1, total - a);
            EXPECT_EQ(expand_power_sum(product_as_power_sum(e), {0, 1}), target) << a << "," << total - a;
        }
        for (int a = 1; a + 2 <= total; ++a)
            for (int b = 1; a + b + 1 <= total; ++b) {
                std::vector<int> e{a, b, total - a - b};
                QuadPoly target = QuadPoly::x(0, a) * QuadPoly::x(1, b) * QuadPoly::x(2, e[2]);
                EXPECT_EQ(expand_power_sum(product_as_power_sum(e), {0, 1, 2}), target);
            }
    }
}

TEST(PowerSum, OneTwoThreeExpansion) {
    // x1 x2^2 x3^3: twelve terms, each matching one printed (coefficient, linear form)
    // after rescaling the form so its leading weight is +-1.
    PowerSumExpansion e = product_as_power_sum({1, 2, 3});
    ASSERT_EQ(e.s, 6);
    ASSERT_EQ(e.halved_index, 0);
    ASSERT_EQ(e.terms.size(), 12u);

    struct Printed {
        Rational c;
        std::vector<Rational> w;
    };
    const std::vector<Printed> printed = {
        {q(1, 360), {q(1, 2), q(1), q(3, 2)}},    {q(-1, 120), {q(1, 2), q(1), q(1, 2)}},
        {q(1, 120), {q(1, 2), q(1), q(-1, 2)}},   {q(-1, 360), {q(1, 2), q(1), q(-3, 2)}},
        {q(-1, 11520), {q(1), q(0), q(3)}},       {q(1, 3840), {q(1), q(0), q(1)}},
        {q(-1, 3840), {q(1), q(0), q(-1)}},       {q(1, 11520), {q(1), q(0), q(-3)}},
        {q(1, 360), {q(-1, 2), q(1), q(-3, 2)}},  {q(-1, 120), {q(-1, 2), q(1), q(-1, 2)}},
        {q(1, 120), {q(-1, 2), q(1), q(1, 2)}},   {q(-1, 360), {q(-1, 2), q(1), q(3, 2)}},
    };
    std::vector<bool> used(printed.size(), false);
    for (const auto &t : e.terms) {
        bool found = false;
        for (size_t k = 0; k < printed.size() && !found; ++k) {
            if (used[k]) continue;
            // t.w = mu * printed.w with t.c * mu^6 = printed.c
            size_t lead = 0;
            while (sgn(printed[k].w[lead]) == 0) ++lead;
            Rational mu = t.weights[lead] / printed[k].w[lead];
            bool prop = true;
            for (size_t i = 0; i < 3; ++i) prop = prop && (t.weights[i] == mu * printed[k].w[i]);
            Rational mu6 = mu * mu * mu * mu * mu * mu;
            if (prop && t.coeff * mu6 == printed[k].c) used[k] = found = true;
        }
        EXPECT_TRUE(found) << "unmatched term";
    }
}

TEST(PowerSum, CubePolarizationHasSevenTerms) {
    PowerSumExpansion e = polarization_expansion(3);
    EXPECT_EQ(e.terms.size(), 7u);
    EXPECT_EQ(expand_power_sum(e, {0, 1, 2}), QuadPoly::x(0) * QuadPoly::x(1) * QuadPoly::x(2));
    EXPECT_EQ(expand_power_sum(polarization_expansion(4), {0, 1, 2, 3}),
              QuadPoly::x(0) * QuadPoly::x(1) * QuadPoly::x(2) * QuadPoly::x(3));
}
