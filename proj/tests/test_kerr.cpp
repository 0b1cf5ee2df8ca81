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

#include <cmath>
#include <random>

#include "cvgate/kerr.hpp"

using namespace cvgate;

namespace {

// dyadic values keep every double operation below exact
double dyadic(std::mt19937 &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng) / 8.0; }

double nonzero_dyadic(std::mt19937 &rng, int lo, int hi) {
    double v = 0;
    while (v == 0) v = dyadic(rng, lo, hi);
    return v;
}

Coeff c(double v) { return Coeff(Rational(v)); }

QuadPoly pxxp() { return QuadPoly::p(0) * QuadPoly::x(0, 2) * QuadPoly::p(0); }
QuadPoly xppx() { return QuadPoly::x(0) * QuadPoly::p(0, 2) * QuadPoly::x(0); }

}  // namespace

TEST(KerrSynthesis, SolveCancellation) {
    Cancellation s = solve_cancellation(1, 2);
    EXPECT_EQ(s.delta, 11);
    EXPECT_EQ(s.beta, -16);
    Cancellation z = solve_cancellation(0.7, 0);
    EXPECT_EQ(z.delta, -0.7);
    EXPECT_EQ(z.beta, 0);

    std::mt19937 rng(7);
    const QuadMonomial x1 = QuadMonomial::x(0), x2 = QuadMonomial::x(0, 2), p2 = QuadMonomial::p(0, 2);
    for (int i = 0; i < 20; ++i) {
        const double chi = nonzero_dyadic(rng, -16, 16), y = nonzero_dyadic(rng, -12, 12);
        const double lam = nonzero_dyadic(rng, 2, 20);
        Cancellation k = solve_cancellation(chi, y);
        QuadPoly h = effective_hamiltonian({chi, k.delta, k.beta}, {lam, y});
        EXPECT_TRUE(h.coefficient(x2).is_zero()) << i;
        EXPECT_TRUE(h.coefficient(x1).is_zero()) << i;
        // the p^2 term is not cancelled: (hbar/2) lambda^-2 (2 chi y^2)
        EXPECT_EQ(h.coefficient(p2), Coeff(Rational(chi) * Rational(y) * Rational(y) / (Rational(lam) * Rational(lam))) *
                                         Coeff::hbar_pow(-1));
    }
}

TEST(KerrSynthesis, CubicCoefficient) {
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        const double chi = nonzero_dyadic(rng, -16, 16), y = nonzero_dyadic(rng, -12, 12);
        const double lam = nonzero_dyadic(rng, 2, 20), delta = dyadic(rng, -8, 8), beta = dyadic(rng, -8, 8);
        QuadPoly h = effective_hamiltonian({chi, delta, beta}, {lam, y});
        const Coeff x3 = h.coefficient(QuadMonomial::x(0, 3));
        // -chi lambda^3 y / (sqrt(2) hbar^{3/2}) for every hbar
        EXPECT_EQ(x3, c(-2 * chi * lam * lam * lam * y) * Coeff::sigma_pow(-3)) << i;
        // the printed -(sqrt(hbar)/sqrt(2)) chi lambda^3 y holds at hbar = 1
        const double printed = -std::sqrt(1.0 / 2) * chi * std::pow(lam, 3) * y;
        EXPECT_NEAR(x3.eval_real(1.0), printed, 1e-12 * std::abs(printed)) << i;
        EXPECT_TRUE(h.is_hermitian());
    }
}

TEST(KerrSynthesis, PrintedDisplayAtUnitHbar) {
    const double chi = 0.75, lam = 1.25, y = 0.625, delta = 0.375, beta = -0.5;
    const Coeff s1 = Coeff::sigma_pow(1), hb = Coeff::hbar_pow(1);
    QuadPoly quart = QuadPoly::x(0, 4) * c(std::pow(lam, 4)) + pxxp() + xppx() + QuadPoly::p(0, 4) * c(std::pow(lam, -4));
    QuadPoly display = quart * c(-chi / 8) - QuadPoly::x(0, 3) * (s1 * c(chi * std::pow(lam, 3) * y / 2)) -
                       QuadPoly::p(0) * QuadPoly::x(0) * QuadPoly::p(0) * (s1 * c(chi * y / lam / 2)) +
                       QuadPoly::x(0, 2) * (hb * c(lam * lam * (-3 * chi * y * y + chi + delta) / 2)) +
                       QuadPoly::p(0, 2) * (hb * c((-chi * y * y + chi + delta) / (lam * lam) / 2)) +
                       QuadPoly::x(0) * (s1 * s1 * s1 * c(lam * (-chi * y * y * y + chi * y + delta * y + beta) / 2));
    QuadPoly diff = display.normal() - effective_hamiltonian({chi, delta, beta}, {lam, y});
    for (double hbar : {1.0, 2.0}) {
        double worst = 0;
        for (const auto &[m, v] : diff.terms())
            if (!m.factors.empty()) worst = std::max(worst, std::abs(v.eval(hbar)));
        if (hbar == 1.0)
            EXPECT_LT(worst, 1e-12);
        else
            EXPECT_GT(worst, 1e-2);  // the display is written for hbar = 1
    }
}

TEST(KerrSynthesis, ResidualRatios) {
    for (double hbar : {1.0, 2.0}) {
        CubicResidual a = cubic_residual(1.0, 8.0, 3.0, hbar), b = cubic_residual(1.0, 16.0, 3.0, hbar);
        EXPECT_NEAR(a.quartic_ratio / b.quartic_ratio, 4.0, 1e-9);
        EXPECT_NEAR(a.quartic_ratio, 1.0 / (64 * 4 * std::sqrt(2.0) * std::sqrt(hbar)), 1e-15);
        // sqrt(2 hbar) lambda^-5 y, as printed, for every hbar
        EXPECT_NEAR(a.p2_ratio, std::sqrt(2.0 * hbar) * std::pow(8.0, -2), 1e-12);
        EXPECT_LT(b.tail_ratio, a.tail_ratio);
    }
    // lambda = 1, y = 1: ratios are the raw coefficients
    CubicResidual u = cubic_residual(1.0, 1.0, 3.0, 2.0);
    Cancellation k = solve_cancellation(1.0, 1.0);
    QuadPoly h = effective_hamiltonian({1.0, k.delta, k.beta}, {1.0, 1.0});
    const double c3 = h.coefficient(QuadMonomial::x(0, 3)).eval_real(2.0);
    EXPECT_EQ(u.cubic_coeff, c3);
    EXPECT_EQ(u.quartic_ratio, std::abs(h.coefficient(QuadMonomial::x(0, 4)).eval_real(2.0) / c3));
    EXPECT_EQ(u.p2_ratio, std::abs(h.coefficient(QuadMonomial::p(0, 2)).eval_real(2.0) / c3));
    EXPECT_THROW(cubic_residual(1.0, 0.0), std::invalid_argument);

    nlohmann::json j = to_json(cubic_residual(1.0, 2.0));
    EXPECT_TRUE(j.contains("cubic_coeff"));
    EXPECT_TRUE(j["ratios"].is_object());
    EXPECT_EQ(j["cancellation"]["delta"].get<double>(), 3 * 64.0 - 1);
    EXPECT_EQ(j["cancellation"]["beta"].get<double>(), -2 * 512.0);
}

TEST(KerrSynthesis, FrameIsASimilarity) {
    // identity frame: the bare Kerr Hamiltonian in quadratures
    const Coeff hb = Coeff::hbar_pow(1);
    QuadPoly n2 = QuadPoly::x(0, 2) + QuadPoly::p(0, 2);
    QuadPoly bare = (n2 * n2 - n2 * (Coeff(4) * hb) + QuadPoly(Coeff(3) * hb * hb)) *
                    (Coeff(Rational(-1, 8)) * Coeff::hbar_pow(-2));
    EXPECT_EQ(effective_hamiltonian({1.0, 0.0, 0.0}, {1.0, 0.0}), bare);
    EXPECT_TRUE(effective_hamiltonian({0.0, 0.0, 0.0}, {1.5, 0.5}).is_zero());

    // linear in the Hamiltonian
    FrameParams f{1.375, -0.25};
    QuadPoly sum = effective_hamiltonian({0.5, 0.25, 0.0}, f) + effective_hamiltonian({0.25, 0.0, -0.75}, f);
    EXPECT_EQ(sum, effective_hamiltonian({0.75, 0.25, -0.75}, f));

    // y = 0, delta = -chi: only quartic (and constant) terms survive
    QuadPoly q = effective_hamiltonian({1.0, -1.0, 0.0}, {1.5, 0.0});
    const QuadPoly qn = q.normal();
    for (const auto &[m, v] : qn.terms()) EXPECT_TRUE(m.degree() == 4 || m.degree() == 0 || m.is_mixed()) << m.str();
    EXPECT_TRUE(q.coefficient(QuadMonomial::x(0, 2)).is_zero());
    EXPECT_TRUE(q.coefficient(QuadMonomial::p(0, 2)).is_zero());
    EXPECT_TRUE(q.coefficient(QuadMonomial::x(0, 3)).is_zero());
}

TEST(KerrSynthesis, MatchesFockConjugation) {
    for (double lam : {1.0, 1.25, 1.5})
        for (double y : {-1.0, 0.0, 0.5, 1.0})
            EXPECT_LT(frame_fock_deviation({1.0, 0.3, 0.2}, {lam, y}, 20, 8, 2.0), 1e-6) << lam << " " << y;
}
