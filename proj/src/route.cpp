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


#include "cvgate/route.hpp"

#include "cvgate/approx.hpp"
#include "cvgate/errors.hpp"
#include "cvgate/exact.hpp"
#include "cvgate/gaussian.hpp"

namespace cvgate {

namespace {

bool is_quadratic(const QuadPoly &h) { return !h.is_zero() && h.normal().degree() <= 2; }

QuadPoly drop_constant(const QuadPoly &h) {
    QuadPoly out;
    for (const auto &[m, c] : h.terms())
        if (m.degree() > 0) out.add_term(m, c);
    return out;
}

// a lone x, x^2 or x_j x_k is already a gate
bool primitive_gate(const QuadPoly &h, const RouteOptions &opt, Circuit &c) {
    if (h.terms().size() != 1) return false;
    const auto &[m, coeff] = *h.terms().begin();
    if (m.has_p() || m.order != QuadMonomial::Order::Normal || !coeff.is_rational()) return false;
    const Coeff s = coeff * Coeff(opt.t);
    const Coeff hb = Coeff::hbar_pow(1);
    c.num_modes = h.num_modes();
    c.hbar = opt.hbar;
    if (m.factors.size() == 1 && m.factors[0].dx <= 2) {
        const int j = m.factors[0].mode;
        if (m.factors[0].dx == 1)
            c.append(make_exact(GateKind::Z, {j}, s * hb, opt.hbar));
        else
            c.append(make_exact(GateKind::P, {j}, Coeff(2) * s * hb, opt.hbar));
        return true;
    }
    if (m.factors.size() == 2 && m.factors[0].dx == 1 && m.factors[1].dx == 1) {
        c.append(make_exact(GateKind::CZ, {m.factors[0].mode, m.factors[1].mode}, s * hb, opt.hbar));
        return true;
    }
    return false;
}

DecompositionReport gaussian(const QuadPoly &h, const RouteOptions &opt) {
    if (!is_quadratic(h)) throw IneligibleTarget("gaussian method needs a generator of degree <= 2");
    if (!h.is_hermitian()) throw IneligibleTarget("generator is not Hermitian: " + h.str());
    DecompositionReport r;
    r.method = "gaussian";
    const QuadPoly g = drop_constant(h.normal());
    if (g.terms().size() != h.normal().terms().size()) r.notes.push_back("constant term dropped (global phase)");
    if (!primitive_gate(g, opt, r.circuit)) {
        const int m = g.num_modes();
        try {
            r.circuit = compile_gaussian(quadratic_from_poly(g, opt.t.get_d(), m, opt.hbar), opt.hbar);
        } catch (const std::invalid_argument &e) {
            throw IneligibleTarget(std::string("gaussian method: ") + e.what());
        }
    }
    r.counts = count_gates(r.circuit);
    r.closed_form_count = static_cast<double>(r.counts.total_excluding_fourier);
    return r;
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::Gaussian: return "gaussian";
        case Method::Exact: return "exact";
        case Method::ExactGeneralized: return "exact-generalized";
        case Method::Commutator: return "commutator";
        case Method::Kerr: return "kerr";
        case Method::Auto: return "auto";
    }
    return "?";
}

Method method_from_name(const std::string &s) {
    for (Method m : {Method::Gaussian, Method::Exact, Method::ExactGeneralized, Method::Commutator, Method::Kerr,
                     Method::Auto})
        if (method_name(m) == s) return m;
    throw std::invalid_argument("unknown method '" + s + "'");
}

Method route(const QuadPoly &h) {
    if (is_quadratic(h)) return Method::Gaussian;
    MonomialTarget target;
    try {
        target = monomial_target(h, Rational(1));
    } catch (const IneligibleTarget &) {
        return Method::Commutator;
    }
    if (exact_count(target.exponents, ExactMethod::Classic) >= 0) return Method::Exact;
    if (exact_count(target.exponents, ExactMethod::Generalized) >= 0) return Method::ExactGeneralized;
    return Method::Commutator;
}

DecompositionReport decompose(const QuadPoly &h, Method m, const RouteOptions &opt) {
    if (h.is_zero()) throw IneligibleTarget("empty generator");
    switch (m) {
        case Method::Auto: {
            DecompositionReport r = decompose(h, route(h), opt);
            r.notes.push_back("auto routed to " + r.method);
            return r;
        }
        case Method::Gaussian: return gaussian(h, opt);
        case Method::Exact:
        case Method::ExactGeneralized: {
            const MonomialTarget target = monomial_target(h, opt.t);
            DecompositionReport r = synthesize_product(
                target, m == Method::Exact ? ExactMethod::Classic : ExactMethod::Generalized, opt.hbar);
            r.closed_form_count = static_cast<double>(r.counts.total_excluding_fourier);
            return r;
        }
        case Method::Commutator: {
            if (!h.is_hermitian()) throw IneligibleTarget("generator is not Hermitian: " + h.str());
            ApproximationBudget b;
            b.epsilon = opt.epsilon;
            b.t = opt.t.get_d();
            b.K_inner = opt.K;
            return compile_approximate(h, b, opt.hbar, opt.materialize);
        }
        case Method::Kerr:
            throw IneligibleTarget("the kerr method reports an effective Hamiltonian, not a circuit; use the kerr subcommand");
    }
    throw std::logic_error("decompose: bad method");
}

}  // namespace cvgate
