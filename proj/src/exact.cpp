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

#include "cvgate/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "cvgate/errors.hpp"
#include "cvgate/power_sum.hpp"

namespace cvgate {

namespace {

const Coeff &hb() {
    static const Coeff c = Coeff::hbar_pow(1);
    return c;
}
const Coeff &inv_hb() {
    static const Coeff c = Coeff::hbar_pow(-1);
    return c;
}

Coeff q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return Coeff(r);
}

/// Positive rational near v, used for scale choices that do not affect exactness.
Rational balance(double v) {
    if (!std::isfinite(v) || v < 1.0 / 64) return Rational(1);
    Rational r = rational_approx(v, 64);
    return sgn(r) > 0 ? r : Rational(1);
}

double magnitude(const Coeff &c, double hbar) { return std::abs(c.eval(hbar)); }

// claim c * monomial, emitted as the matching primitive
Plan leaf_z(const Coeff &c, int j, double hbar) { return plan_leaf(make_exact(GateKind::Z, {j}, c * hb(), hbar)); }
Plan leaf_p(const Coeff &c, int j, double hbar) {
    return plan_leaf(make_exact(GateKind::P, {j}, c * hb() * Coeff(2), hbar));
}
Plan leaf_v(const Coeff &c, int j, double hbar) {
    return plan_leaf(make_exact(GateKind::V, {j}, c * hb() * Coeff(3), hbar));
}
Plan leaf_cz(const Coeff &c, int j, int k, double hbar) {
    return plan_leaf(make_exact(GateKind::CZ, {j, k}, c * hb(), hbar));
}

/// x_j -> x_j + w x_k, generator -w p_j x_k / hbar.
Plan shear(int j, int k, const Coeff &w, double hbar) {
    Plan p = plan_fourier_frame(plan_leaf(make_exact(GateKind::CZ, {j, k}, w, hbar)), j);
    p.block.label = "shear";
    return p;
}

/// x_j -> x_j + w x_k^m.
Plan power_shear(int j, int k, int m, const Coeff &w, double hbar) {
    if (m == 1) return shear(j, k, w, hbar);
    return p_times_power(-(w * inv_hb()), m, j, k, hbar);
}

/// exp(i c p_k^3)
Plan momentum_cubic(const Coeff &c, int k, double hbar) {
    Plan p = plan_fourier_frame(leaf_v(-c, k, hbar), k);
    p.block.label = "pcubic";
    return p;
}

QuadPoly shift_x(const QuadPoly &g, int j, const QuadPoly &image) { return substitute(g, {{j, image}}, {}); }

Plan conj_shifted(const std::string &label, const Plan &outer, const Plan &inner, int j, const QuadPoly &image) {
    return plan_conj(label, outer, inner, shift_x(*inner.block.generator, j, image));
}

}  // namespace

int MonomialTarget::active_modes() const {
    int n = 0;
    for (int s : exponents) n += s > 0;
    return n;
}

int MonomialTarget::total_degree() const {
    int n = 0;
    for (int s : exponents) n += s;
    return n;
}

QuadPoly MonomialTarget::generator() const {
    QuadPoly g{Coeff(t)};
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        const int m = static_cast<int>(i);
        bool is_p = i < p_basis.size() && p_basis[i];
        g = g * (is_p ? QuadPoly::p(m, exponents[i]) : QuadPoly::x(m, exponents[i]));
    }
    return g;
}

MonomialTarget monomial_target(const QuadPoly &h, const Rational &t) {
    if (h.terms().size() != 1) throw IneligibleTarget("exact methods need a single monomial; found " +
                                                      std::to_string(h.terms().size()) + " terms");
    const auto &[m, c] = *h.terms().begin();
    if (m.order == QuadMonomial::Order::Symmetrized)
        throw IneligibleTarget("symmetrized generators mix x and p on one mode; use --method commutator");
    if (m.is_mixed()) throw IneligibleTarget("mixed x/p on the same mode is not covered by exact methods; use --method commutator");
    if (m.degree() == 0) throw IneligibleTarget("constant generator is a global phase");
    if (!c.is_rational()) throw IneligibleTarget("coefficient must be a plain rational: " + c.str());
    MonomialTarget target;
    target.t = t * c.rational_value();
    int n = 0;
    for (const auto &f : m.factors) n = std::max(n, f.mode + 1);
    target.exponents.assign(static_cast<size_t>(n), 0);
    target.p_basis.assign(static_cast<size_t>(n), false);
    for (const auto &f : m.factors) {
        target.exponents[static_cast<size_t>(f.mode)] = f.dx + f.dp;
        target.p_basis[static_cast<size_t>(f.mode)] = f.dp > 0;
    }
    return target;
}

Plan single_mode_power(const Coeff &c, int n, int j, int ancilla, double hbar) {
    switch (n) {
        case 1: return leaf_z(c, j, hbar);
        case 2: return leaf_p(c, j, hbar);
        case 3: return leaf_v(c, j, hbar);
        default: break;
    }
    if (n % 2 != 0) throw UnreachablePower("x^" + std::to_string(n) + " is odd and above 3; no exact construction");
    if (ancilla == j || ancilla < 0) throw std::invalid_argument("single_mode_power: x^n with n >= 4 needs an ancilla");
    const int m = n / 2;
    const int a = ancilla;
    // c x^2m = b (x_a + k x^m)^2 - b x_a^2 - 2 b k x_a x^m with b k^2 = c
    const Coeff kappa(balance(std::sqrt(2.0 * magnitude(c, hbar) * hbar)));
    const Coeff beta = c.divided_by(kappa * kappa);
    Plan w = power_shear(a, j, m, kappa, hbar);
    Plan pa = leaf_p(beta, a, hbar);
    Plan folded = conj_shifted("square", w, pa, a, QuadPoly::x(a) + QuadPoly::x(j, m) * kappa);
    Plan p = plan_seq("pow" + std::to_string(n),
                      {folded, leaf_p(-beta, a, hbar), x_times_power(-(Coeff(2) * beta * kappa), m, a, j, hbar)},
                      QuadPoly::x(j, n) * c);
    return p;
}

Plan px2_gate(const Coeff &c, int k, int j, double hbar) {
    if (j == k) throw std::invalid_argument("px2_gate: modes must differ");
    // four momentum cubics in frames p_k -> p_k + d u x_j, d = 1,2,1,0 with
    // signs +,-,+,-, leave -6 tau u^2 p_k x_j^2 - 6 tau u^3 x_j^3
    const Coeff u(balance(std::cbrt(magnitude(c, hbar) * hbar / 2.0)));
    const Coeff tau = -c.divided_by(Coeff(6) * u * u);
    auto cz = [&](const Coeff &v) { return plan_leaf(make_exact(GateKind::CZ, {j, k}, v, hbar)); };
    std::vector<Plan> parts = {
        cz(u),  momentum_cubic(tau, k, hbar),  cz(u),  momentum_cubic(-tau, k, hbar),
        cz(-u), momentum_cubic(tau, k, hbar),  cz(-u), momentum_cubic(-tau, k, hbar),
        leaf_v(Coeff(6) * tau * u * u * u, j, hbar),
    };
    return plan_seq("px2", parts, QuadPoly::p(k) * QuadPoly::x(j, 2) * c);
}

Plan general_two_mode(const Coeff &c, int n, int k, int j, double hbar) {
    if (n < 3) throw std::invalid_argument("general_two_mode: n must be >= 3");
    if (j == k) throw std::invalid_argument("general_two_mode: modes must differ");
    // e^{-iA} e^{iB} e^{iA} e^{-iB} e^{-i b a^2 hbar^2 x^{2n-2}} = e^{2i a b hbar p_k x_j^n}
    // with A = a x_j^{n-2} x_k, B = b x_j^2 p_k^2
    const Coeff a(balance(std::sqrt(magnitude(c, hbar) / 2.0) / hbar));
    const Coeff b = c.divided_by(Coeff(2) * a * hb());
    Plan ea = x_times_power(a, n - 2, k, j, hbar);
    Plan eb = plan_fourier_frame(square_times_even(b, 1, j, k, hbar), k);
    QuadPoly shifted_p = QuadPoly::p(k) + QuadPoly::x(j, n - 2) * (a * hb());
    Plan mid = plan_conj("shiftB", ea, eb, substitute(*eb.block.generator, {}, {{k, shifted_p}}));
    Plan corr = single_mode_power(-(b * a * a * hb() * hb()), 2 * n - 2, j, k, hbar);
    return plan_seq("twomode" + std::to_string(n), {plan_inverse(eb), mid, corr},
                    QuadPoly::p(k) * QuadPoly::x(j, n) * c);
}

Plan p_times_power(const Coeff &c, int n, int k, int j, double hbar) {
    if (n == 1) {
        Plan p = plan_fourier_frame(leaf_cz(-c, k, j, hbar), k);
        p.block.label = "px";
        return p;
    }
    if (n == 2) return px2_gate(c, k, j, hbar);
    return general_two_mode(c, n, k, j, hbar);
}

Plan x_times_power(const Coeff &c, int n, int k, int j, double hbar) {
    if (n == 1) return leaf_cz(c, k, j, hbar);
    Plan p = plan_fourier_frame(p_times_power(c, n, k, j, hbar), k);
    p.block.label = "xlin" + std::to_string(n);
    return p;
}

Plan square_times_even(const Coeff &c, int m, int j, int k, double hbar) {
    if (m < 1) throw std::invalid_argument("square_times_even: m must be >= 1");
    // 12 a^2 v^2 = (a+v)^4 + (a-v)^4 - 2a^4 - 2v^4, a = x_j, v = x_k^m
    const Coeff c12 = c * q(1, 12);
    const Coeff c6 = -(c * q(1, 6));
    const QuadPoly target = QuadPoly::x(j, 2) * QuadPoly::x(k, 2 * m) * c;
    if (m == 1) {
        // the two inner shears fuse into one
        return plan_seq("sq2",
                        {shear(j, k, Coeff(1), hbar), single_mode_power(c12, 4, j, k, hbar),
                         shear(j, k, Coeff(-2), hbar), single_mode_power(c12, 4, j, k, hbar),
                         shear(j, k, Coeff(1), hbar), single_mode_power(c6, 4, j, k, hbar),
                         single_mode_power(c6, 4, k, j, hbar)},
                        target);
    }
    Plan p4 = single_mode_power(c12, 4, j, k, hbar);
    Plan plus = conj_shifted("plus", power_shear(j, k, m, Coeff(1), hbar), p4, j, QuadPoly::x(j) + QuadPoly::x(k, m));
    Plan minus = conj_shifted("minus", power_shear(j, k, m, Coeff(-1), hbar), p4, j, QuadPoly::x(j) - QuadPoly::x(k, m));
    return plan_seq("sq" + std::to_string(2 * m),
                    {plus, minus, single_mode_power(c6, 4, j, k, hbar), single_mode_power(c6, 4 * m, k, j, hbar)},
                    target);
}

namespace {

/// Realizes sum_terms c_t (sum_i h_i x_{modes[i]})^s by folding each linear
/// form into its lowest-index mode with a nonzero weight.
Plan fold_expansion(PowerSumExpansion e, const std::vector<int> &modes, const std::vector<int> &exps, Coeff c,
                    double hbar, const std::string &label) {
    // expand in y_0 = x_0, y_i = lam x_i: shorter shears keep photon numbers
    // low inside the conjugations, exactness does not depend on lam
    const Rational lam(3, 4);
    for (size_t i = 1; i < exps.size(); ++i)
        for (int k = 0; k < exps[i]; ++k) c = c * Coeff(Rational(1 / lam));
    for (auto &term : e.terms)
        for (size_t i = 1; i < term.weights.size(); ++i) term.weights[i] *= lam;
    std::vector<Plan> parts;
    QuadPoly total;
    for (const auto &term : e.terms) {
        size_t lead = 0;
        while (lead < term.weights.size() && sgn(term.weights[lead]) == 0) ++lead;
        if (lead == term.weights.size()) continue;  // zero form
        const int m0 = modes[lead];
        Rational h0 = term.weights[lead];
        Rational scale = 1;
        for (int i = 0; i < e.s; ++i) scale *= h0;
        const Coeff ct = c * Coeff(Rational(term.coeff * scale));
        int anc = -1;
        for (int mm : modes)
            if (mm != m0) {
                anc = mm;
                break;
            }
        Plan inner = single_mode_power(ct, e.s, m0, anc, hbar);
        std::vector<Plan> shears;
        QuadPoly image = QuadPoly::x(m0);
        for (size_t i = 0; i < term.weights.size(); ++i) {
            if (i == lead || sgn(term.weights[i]) == 0) continue;
            Rational w = term.weights[i] / h0;
            w.canonicalize();
            shears.push_back(shear(m0, modes[i], Coeff(w), hbar));
            image += QuadPoly::x(modes[i]) * Coeff(w);
        }
        QuadPoly g = shift_x(*inner.block.generator, m0, image);
        total += g;
        if (shears.empty())
            parts.push_back(inner);
        else
            parts.push_back(plan_conj("term", plan_seq("fold", shears), inner, g));
    }
    return plan_seq(label, parts, total);
}

std::string exps_str(const std::vector<int> &s) {
    std::string r = "(";
    for (size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + ")";
}

bool divisible_2_or_3(int s) { return s % 2 == 0 || s % 3 == 0; }

}  // namespace

Plan synthesize_plan(const MonomialTarget &target, ExactMethod method, double hbar, int &num_modes,
                     std::vector<int> &ancillae) {
    std::vector<int> modes, s;
    for (size_t i = 0; i < target.exponents.size(); ++i)
        if (target.exponents[i] > 0) {
            modes.push_back(static_cast<int>(i));
            s.push_back(target.exponents[i]);
        }
    num_modes = std::max<int>(num_modes, static_cast<int>(target.exponents.size()));
    if (modes.empty()) throw IneligibleTarget("constant generator is a global phase");

    // x-form coefficient: x -> -p under the Fourier frame
    Rational cx = target.t;
    for (size_t i = 0; i < target.exponents.size(); ++i)
        if (i < target.p_basis.size() && target.p_basis[i] && target.exponents[i] % 2 == 1) cx = -cx;
    const Coeff c(cx);
    const int n = static_cast<int>(modes.size());
    const int total = target.total_degree();

    Plan core;
    if (n == 1) {
        const int sj = s[0];
        if (sj > 3 && method == ExactMethod::Generalized)
            throw IneligibleTarget("power-sum method needs at least two modes for degree above 3");
        if (sj > 3 && sj % 2 == 1) throw UnreachablePower("x^" + std::to_string(sj) + ": odd powers above 3 are unreachable");
        int anc = -1;
        if (sj > 3) {
            anc = num_modes++;
            ancillae.push_back(anc);
        }
        core = single_mode_power(c, sj, modes[0], anc, hbar);
    } else if (method == ExactMethod::Generalized) {
        if (!divisible_2_or_3(total))
            throw IneligibleTarget("power-sum method needs total degree divisible by 2 or 3; got " + std::to_string(total));
        if (total > 3 && total % 2 == 1)
            throw UnreachablePower("power-sum method needs x^" + std::to_string(total) + ", which is unreachable");
        core = fold_expansion(product_as_power_sum(s), modes, s, c, hbar, "powersum");
    } else {
        if (total >= 4 && !divisible_2_or_3(total))
            throw IneligibleTarget("classic method needs total degree divisible by 2 or 3; got " + std::to_string(total));
        const std::string shape = exps_str(s);
        bool all_ones = true;
        for (int v : s) all_ones = all_ones && v == 1;
        if (n == 2 && all_ones) {
            core = leaf_cz(c, modes[0], modes[1], hbar);
        } else if (all_ones) {
            if (n > 3 && n % 2 == 1) throw UnreachablePower("product of " + std::to_string(n) + " modes needs an odd power above 3");
            core = fold_expansion(polarization_expansion(n), modes, s, c, hbar, "polarization");
        } else if (n == 2 && (s[0] == 1 || s[1] == 1)) {
            const int k = s[0] == 1 ? modes[0] : modes[1];
            const int j = s[0] == 1 ? modes[1] : modes[0];
            core = x_times_power(c, s[0] == 1 ? s[1] : s[0], k, j, hbar);
        } else if (n == 2 && (s[0] == 2 || s[1] == 2) && s[0] % 2 == 0 && s[1] % 2 == 0) {
            const bool first_is_two = s[0] == 2;
            const int j = first_is_two ? modes[0] : modes[1];
            const int k = first_is_two ? modes[1] : modes[0];
            core = square_times_even(c, (first_is_two ? s[1] : s[0]) / 2, j, k, hbar);
        } else if (n == 3 && s[0] + s[1] + s[2] == 4 && (s[0] == 2 || s[1] == 2 || s[2] == 2)) {
            int jj = 0;
            while (s[jj] != 2) ++jj;
            std::vector<int> rest;
            for (int i = 0; i < 3; ++i)
                if (i != jj) rest.push_back(modes[i]);
            const int j = modes[jj], k = rest[0], l = rest[1];
            const Coeff c4 = c * q(1, 4);
            // x_j^2 x_k x_l = x_j^2 [(x_k + x_l)^2 - (x_k - x_l)^2] / 4
            core = plan_seq("sq2lin",
                            {shear(k, l, Coeff(1), hbar), square_times_even(c4, 1, j, k, hbar),
                             shear(k, l, Coeff(-2), hbar), square_times_even(-c4, 1, j, k, hbar),
                             shear(k, l, Coeff(1), hbar)},
                            QuadPoly::x(j, 2) * QuadPoly::x(k) * QuadPoly::x(l) * c);
        } else {
            throw IneligibleTarget("classic method covers x^n, x_j x_k^n, x_j^2 x_k^2m, x_j^2 x_k x_l and products of "
                                   "distinct modes; exponents " + shape + " need --method exact-generalized");
        }
    }

    for (size_t i = 0; i < target.exponents.size(); ++i)
        if (target.exponents[i] > 0 && i < target.p_basis.size() && target.p_basis[i])
            core = plan_fourier_frame(core, static_cast<int>(i));
    return core;
}

DecompositionReport synthesize_product(const MonomialTarget &target, ExactMethod method, double hbar,
                                       bool symbolic_check) {
    DecompositionReport rep;
    rep.method = method == ExactMethod::Classic ? "exact" : "exact-generalized";
    int num_modes = static_cast<int>(target.exponents.size());
    std::vector<int> anc;
    Plan plan = synthesize_plan(target, method, hbar, num_modes, anc);
    if (symbolic_check) {
        CheckResult chk = verify_plan(plan);
        if (!chk.ok) throw std::logic_error("symbolic check failed: " + chk.detail);
        QuadPoly diff = *plan.block.generator - target.generator();
        if (!diff.normal().is_zero()) throw std::logic_error("plan generator differs from target: " + diff.str());
        rep.symbolic_check = true;
    }
    rep.circuit.num_modes = num_modes;
    rep.circuit.ancillae = anc;
    rep.circuit.hbar = hbar;
    rep.circuit.gates = plan.gates;
    rep.circuit = cancel_fourier_pairs(rep.circuit);
    rep.counts = count_gates(rep.circuit);
    if (method == ExactMethod::Generalized) {
        std::vector<int> s;
        for (int v : target.exponents)
            if (v > 0) s.push_back(v);
        rep.convention_count = generalized_convention_count(s);
    } else {
        rep.convention_count = rep.counts.total_excluding_fourier;
    }
    return rep;
}

long long cost_power(int n) {
    if (n >= 1 && n <= 3) return 1;
    if (n < 1 || n % 2 == 1) return -1;
    long long l = cost_linear_power(n / 2);
    return l < 0 ? -1 : 3 * l + 2;
}

namespace {

long long cost_square_times_even(int m) {
    if (m == 1) return 3 + 4 * cost_power(4);
    long long l = cost_linear_power(m), p = cost_power(4 * m);
    if (l < 0 || p < 0) return -1;
    return 4 * l + 3 * cost_power(4) + p;
}

}  // namespace

long long cost_linear_power(int n) {
    if (n == 1) return 1;
    if (n == 2) return 9;
    if (n < 1) return -1;
    long long l = cost_linear_power(n - 2), p = cost_power(2 * n - 2);
    if (l < 0 || p < 0) return -1;
    return 2 * l + 2 * cost_square_times_even(1) + p;
}

long long exact_count(const std::vector<int> &exponents, ExactMethod method) {
    std::vector<int> s;
    for (int v : exponents)
        if (v > 0) s.push_back(v);
    const int n = static_cast<int>(s.size());
    int total = 0;
    for (int v : s) total += v;
    if (n == 0) return -1;
    if (n == 1) {
        if (method == ExactMethod::Generalized && s[0] > 3) return -1;
        return cost_power(s[0]);
    }
    if (method == ExactMethod::Generalized) {
        if (!divisible_2_or_3(total)) return -1;
        long long p = cost_power(total);
        if (p < 0) return -1;
        long long count = 0;
        for (const auto &t : product_as_power_sum(s).terms) {
            int nz = 0;
            for (const auto &w : t.weights) nz += sgn(w) != 0;
            if (nz > 0) count += p + 2 * (nz - 1);
        }
        return count;
    }
    if (total >= 4 && !divisible_2_or_3(total)) return -1;
    bool all_ones = true;
    for (int v : s) all_ones = all_ones && v == 1;
    if (n == 2 && all_ones) return 1;
    if (all_ones) {
        long long p = cost_power(n);
        if (p < 0) return -1;
        long long count = 0;
        for (const auto &t : polarization_expansion(n).terms) {
            int nz = 0;
            for (const auto &w : t.weights) nz += sgn(w) != 0;
            count += p + 2 * (nz - 1);
        }
        return count;
    }
    if (n == 2 && (s[0] == 1 || s[1] == 1)) return cost_linear_power(s[0] == 1 ? s[1] : s[0]);
    if (n == 2 && (s[0] == 2 || s[1] == 2) && s[0] % 2 == 0 && s[1] % 2 == 0)
        return cost_square_times_even((s[0] == 2 ? s[1] : s[0]) / 2);
    if (n == 3 && total == 4 && (s[0] == 2 || s[1] == 2 || s[2] == 2)) return 3 + 2 * cost_square_times_even(1);
    return -1;
}

long long generalized_convention_count(const std::vector<int> &exponents) {
    std::vector<int> s;
    for (int v : exponents)
        if (v > 0) s.push_back(v);
    const int n = static_cast<int>(s.size());
    if (n < 2) return -1;
    int total = 0;
    for (int v : s) total += v;
    if (!divisible_2_or_3(total)) return -1;
    long long p = cost_power(total);
    if (p < 0) return -1;
    return static_cast<long long>(product_as_power_sum(s).terms.size()) * (p + 2 * (n - 1));
}

}  // namespace cvgate
