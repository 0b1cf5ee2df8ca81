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

#include "cvgate/heisenberg.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace cvgate {

namespace {

const Coeff &inv_hbar() {
    static const Coeff c = Coeff::hbar_pow(-1);
    return c;
}

/// Drops the scalar term; generators are compared up to global phase.
QuadPoly without_constant(const QuadPoly &p) {
    QuadPoly r;
    const QuadPoly pn = p.normal();
    for (const auto &[m, c] : pn.terms())
        if (m.degree() > 0) r.add_term(m, c);
    return r;
}

}  // namespace

std::optional<QuadPoly> gate_generator(const Gate &g) {
    if (g.kind == GateKind::F) return std::nullopt;
    if (g.exact.empty()) throw std::invalid_argument("gate " + kind_name(g.kind) + " carries no exact parameter");
    const Coeff c = g.exact[0] * inv_hbar();
    const int j = g.modes[0];
    switch (g.kind) {
        case GateKind::Z: return QuadPoly::x(j) * c;
        case GateKind::P: return QuadPoly::x(j, 2) * (c * Coeff(Rational(1, 2)));
        case GateKind::V: return QuadPoly::x(j, 3) * (c * Coeff(Rational(1, 3)));
        case GateKind::CZ: return QuadPoly::x(j) * QuadPoly::x(g.modes[1]) * c;
        default: throw std::invalid_argument("gate " + kind_name(g.kind) + " has no polynomial generator");
    }
}

HeisenbergMap gate_map(const Gate &g) {
    if (g.kind == GateKind::F) {
        const int j = g.modes[0];
        HeisenbergMap m;
        if (g.params.at(0) > 0) {
            m.x[j] = -QuadPoly::p(j);
            m.p[j] = QuadPoly::x(j);
        } else {
            m.x[j] = QuadPoly::p(j);
            m.p[j] = -QuadPoly::x(j);
        }
        return m;
    }
    return generator_map(*gate_generator(g));
}

HeisenbergMap generator_map(const QuadPoly &g, int max_order) {
    const QuadPoly mig = g * (-Coeff::i_unit());
    HeisenbergMap out;
    auto series = [&](const QuadPoly &y) {
        QuadPoly total = y, term = y;
        for (int n = 1;; ++n) {
            if (n > max_order) throw std::runtime_error("adjoint series does not terminate for " + g.str());
            term = commutator(mig, term) * Coeff(Rational(1, n));
            if (term.is_zero()) break;
            total += term;
        }
        return total;
    };
    for (int m : g.modes()) {
        QuadPoly xi = series(QuadPoly::x(m)), pi = series(QuadPoly::p(m));
        if (xi != QuadPoly::x(m)) out.x[m] = xi;
        if (pi != QuadPoly::p(m)) out.p[m] = pi;
    }
    return out;
}

HeisenbergMap compose(const HeisenbergMap &first, const HeisenbergMap &second) {
    HeisenbergMap r = first;
    for (const auto &[m, img] : second.x) r.x[m] = substitute(img, first.x, first.p);
    for (const auto &[m, img] : second.p) r.p[m] = substitute(img, first.x, first.p);
    return r;
}

bool equal_maps(const HeisenbergMap &a, const HeisenbergMap &b) {
    auto side = [](const std::map<int, QuadPoly> &u, const std::map<int, QuadPoly> &v, bool is_p) {
        std::set<int> keys;
        for (const auto &kv : u) keys.insert(kv.first);
        for (const auto &kv : v) keys.insert(kv.first);
        for (int m : keys) {
            const QuadPoly id = is_p ? QuadPoly::p(m) : QuadPoly::x(m);
            auto iu = u.find(m), iv = v.find(m);
            if ((iu == u.end() ? id : iu->second) != (iv == v.end() ? id : iv->second)) return false;
        }
        return true;
    };
    return side(a.x, b.x, false) && side(a.p, b.p, true);
}

Plan plan_leaf(const Gate &g) {
    Plan p;
    p.gates = {g};
    p.block.label = kind_name(g.kind);
    p.block.size = 1;
    if (!g.exact.empty() || g.kind == GateKind::F) p.block.generator = gate_generator(g);
    return p;
}

Plan plan_seq(const std::string &label, const std::vector<Plan> &parts, std::optional<QuadPoly> generator) {
    Plan p;
    p.block.label = label;
    p.block.generator = std::move(generator);
    for (const auto &part : parts) {
        p.gates.insert(p.gates.end(), part.gates.begin(), part.gates.end());
        p.block.children.push_back(part.block);
        p.block.size += part.block.size;
    }
    return p;
}

Plan plan_inverse(const Plan &p) {
    Plan r;
    for (auto it = p.gates.rbegin(); it != p.gates.rend(); ++it) r.gates.push_back(inverse(*it));
    std::function<Block(const Block &)> inv = [&](const Block &b) {
        Block o;
        o.label = b.label;
        o.size = b.size;
        if (b.generator) o.generator = -*b.generator;
        for (auto it = b.children.rbegin(); it != b.children.rend(); ++it) o.children.push_back(inv(*it));
        return o;
    };
    r.block = inv(p.block);
    // a lone Fourier leaf flips F <-> F^dag; its claim stays empty
    return r;
}

Plan plan_conj(const std::string &label, const Plan &outer, const Plan &inner, const QuadPoly &generator) {
    return plan_seq(label, {outer, inner, plan_inverse(outer)}, generator);
}

Plan plan_fourier_frame(const Plan &inner, int mode) {
    std::optional<QuadPoly> g;
    if (inner.block.generator) g = fourier_conjugate(*inner.block.generator, mode);
    return plan_seq("fourier(" + inner.block.label + ")",
                    {plan_leaf(make_fourier(mode)), inner, plan_leaf(make_fourier(mode, true))}, g);
}

namespace {

struct Verified {
    bool ok;
    std::string detail;
    HeisenbergMap map;
};

Verified verify_block(const Block &b, const std::vector<Gate> &gates, size_t offset) {
    if (b.children.empty()) {
        if (b.size != 1) return {false, b.label + ": leaf must cover exactly one gate", {}};
        const Gate &g = gates.at(offset);
        HeisenbergMap m = gate_map(g);
        if (b.generator) {
            auto gg = gate_generator(g);
            if (!gg || without_constant(*gg) != without_constant(*b.generator))
                return {false, b.label + ": leaf claim disagrees with its gate", {}};
        }
        return {true, "", m};
    }
    HeisenbergMap acc;
    size_t at = offset, covered = 0;
    for (const auto &child : b.children) {
        Verified v = verify_block(child, gates, at);
        if (!v.ok) return {false, b.label + "/" + v.detail, {}};
        acc = compose(acc, v.map);
        at += child.size;
        covered += child.size;
    }
    if (covered != b.size) return {false, b.label + ": children do not cover the block", {}};
    if (b.generator) {
        HeisenbergMap claimed = generator_map(*b.generator);
        if (!equal_maps(acc, claimed))
            return {false, b.label + ": composed action differs from the claimed generator", {}};
        return {true, "", claimed};
    }
    return {true, "", acc};
}

}  // namespace

CheckResult verify_plan(const Plan &p) {
    if (p.block.size != p.gates.size()) return {false, "plan size mismatch"};
    Verified v = verify_block(p.block, p.gates, 0);
    return {v.ok, v.detail};
}

HeisenbergMap circuit_map(const std::vector<Gate> &gates) {
    HeisenbergMap acc;
    for (const auto &g : gates) acc = compose(acc, gate_map(g));
    return acc;
}

}  // namespace cvgate
