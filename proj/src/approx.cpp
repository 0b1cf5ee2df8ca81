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


#include "cvgate/approx.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cvgate/errors.hpp"

namespace cvgate {

namespace {

CommNode make_leaf(const QuadPoly &p) {
    CommNode n;
    n.leaf = p;
    n.rule = "gate";
    return n;
}

// i [a, b]
CommNode bracket(CommNode a, CommNode b, std::string rule) {
    CommNode n;
    n.kind = CommNode::Kind::Bracket;
    n.rule = std::move(rule);
    n.kids = {std::move(a), std::move(b)};
    return n;
}

CommNode scaled(CommNode n, const Coeff &c) {
    switch (n.kind) {
    case CommNode::Kind::Leaf:
        n.leaf *= c;
        break;
    case CommNode::Kind::Bracket:
        n.w *= c;
        break;
    case CommNode::Kind::Sum:
        for (auto &k : n.kids) k = scaled(std::move(k), c);
        break;
    }
    return n;
}

// Rescales a bracket so that it expands to exactly `target`.
CommNode exact_as(CommNode n, const QuadPoly &target) {
    const QuadPoly e = n.expand(), t = target.normal();
    const auto &[mon, c] = *t.terms().begin();
    const Coeff r = e.coefficient(mon).divided_by(c);
    if (r.is_zero() || !r.is_monomial() || e != t * r)
        throw std::logic_error("commutator rewrite is not proportional to " + target.str());
    n.w *= Coeff(1).divided_by(r);
    if (!n.w.is_real()) throw std::logic_error("commutator rewrite of " + target.str() + " is not Hermitian");
    return n;
}

CommNode map_leaves(CommNode n, const std::map<int, QuadPoly> &xi, const std::map<int, QuadPoly> &pi) {
    if (n.kind == CommNode::Kind::Leaf) {
        n.leaf = substitute(n.leaf, xi, pi);
        return n;
    }
    for (auto &k : n.kids) k = map_leaves(std::move(k), xi, pi);
    return n;
}

QuadMonomial x_powers(const std::vector<std::pair<int, int>> &e) {
    std::vector<ModePower> f;
    for (auto [mode, k] : e)
        if (k > 0) f.push_back({mode, k, 0});
    return QuadMonomial::from_powers(f);
}

CommNode form_x(const QuadMonomial &m);

// pure monomial in any per-mode basis
CommNode form_pure(const QuadMonomial &m) {
    if (is_primitive(m)) return make_leaf(QuadPoly(m));
    std::vector<ModePower> f;
    std::map<int, QuadPoly> xi, pi;
    for (const auto &p : m.factors) {
        if (p.dp) {
            xi[p.mode] = QuadPoly::p(p.mode);
            pi[p.mode] = -QuadPoly::x(p.mode);
        }
        f.push_back({p.mode, p.dx + p.dp, 0});
    }
    CommNode n = form_x(QuadMonomial::from_powers(f));
    return xi.empty() ? n : map_leaves(std::move(n), xi, pi);
}

CommNode form_x(const QuadMonomial &m) {
    if (is_primitive(m)) return make_leaf(QuadPoly(m));
    const auto &f = m.factors;
    if (f.size() == 1) {
        // x^n ~ [x^{n-1}, [x^3, p^2]]
        const int j = f[0].mode, n = f[0].dx;
        CommNode inner = bracket(make_leaf(QuadPoly::x(j, 3)), make_leaf(QuadPoly::p(j, 2)), "cubic-square");
        return exact_as(bracket(form_x(QuadMonomial::x(j, n - 1)), std::move(inner), "power"), QuadPoly(m));
    }
    if (f.size() == 2) {
        // x_j^a x_k^b ~ [x_k^{b+1}, [x_j^{a+1}, p_j p_k]], k the larger power
        const ModePower &lo = f[0].dx > f[1].dx ? f[1] : f[0];
        const ModePower &hi = &lo == &f[0] ? f[1] : f[0];
        CommNode inner = bracket(form_x(QuadMonomial::x(lo.mode, lo.dx + 1)),
                                 make_leaf(QuadPoly::p(lo.mode) * QuadPoly::p(hi.mode)), "lift");
        return exact_as(bracket(form_x(QuadMonomial::x(hi.mode, hi.dx + 1)), std::move(inner), "two-mode"),
                        QuadPoly(m));
    }
    // x_l^b x_k^a R ~ [x_k^{a+1} R, x_l^b p_k]; l a linear mode when there is one
    int l = -1;
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i].dx == 1) l = static_cast<int>(i);
    if (l < 0)
        l = static_cast<int>(std::min_element(f.begin(), f.end(),
                                              [](const ModePower &a, const ModePower &b) { return a.dx < b.dx; }) -
                             f.begin());
    int k = -1;
    for (size_t i = 0; i < f.size(); ++i)
        if (static_cast<int>(i) != l && (k < 0 || f[i].dx < f[k].dx)) k = static_cast<int>(i);
    std::vector<std::pair<int, int>> rest;
    for (size_t i = 0; i < f.size(); ++i)
        if (static_cast<int>(i) != l) rest.push_back({f[i].mode, f[i].dx + (static_cast<int>(i) == k ? 1 : 0)});
    std::vector<ModePower> yf = {{f[l].mode, f[l].dx, 0}, {f[k].mode, 0, 1}};
    std::sort(yf.begin(), yf.end(), [](const ModePower &a, const ModePower &b) { return a.mode < b.mode; });
    return exact_as(bracket(form_x(x_powers(rest)), form_pure(QuadMonomial::from_powers(yf)), "extend"),
                    QuadPoly(m));
}

// sym(x^a p^b) = w i[x^{a+1}, p^{b+1}] + remainder of lower degree
std::pair<CommNode, QuadPoly> form_sym(const QuadMonomial &m) {
    if (m.factors.size() != 1)
        throw IneligibleTerm("commutator: no rewrite identity for multi-mode symmetrized term " + m.str());
    const ModePower &f = m.factors[0];
    CommNode n = bracket(form_pure(QuadMonomial::x(f.mode, f.dx + 1)), form_pure(QuadMonomial::p(f.mode, f.dp + 1)),
                         "symmetrized");
    const QuadPoly e = n.expand(), t = QuadPoly(m).normal();
    const QuadMonomial lead = QuadMonomial::from_powers({f});
    const Coeff r = e.coefficient(lead).divided_by(t.coefficient(lead));
    n.w = Coeff(1).divided_by(r);
    if (!n.w.is_real()) throw std::logic_error("symmetrized rewrite is not Hermitian");
    return {n, t - e * n.w};
}

void emit_leaf(const QuadPoly &leaf, double s, double hbar, Circuit &out) {
    const auto &[m, c] = *leaf.terms().begin();
    double g = s * c.eval_real(hbar);
    std::vector<int> modes, pm;
    int degree = 0;
    for (const auto &f : m.factors) {
        modes.push_back(f.mode);
        degree += f.dx + f.dp;
        if (f.dp) {
            pm.push_back(f.mode);
            if (f.dp % 2) g = -g;
        }
    }
    for (int k : pm) out.append(make_fourier(k));
    if (modes.size() == 2)
        out.append(make_gate(GateKind::CZ, modes, {g * hbar}));
    else if (degree == 1)
        out.append(make_gate(GateKind::Z, modes, {g * hbar}));
    else if (degree == 2)
        out.append(make_gate(GateKind::P, modes, {2 * g * hbar}));
    else
        out.append(make_gate(GateKind::V, modes, {3 * g * hbar}));
    for (int k : pm) out.append(make_fourier(k, true));
}

// e^{theta [x, y]} from K^2 four-factor cells
void emit_group(const CommNode &x, const CommNode &y, double theta, int K, double hbar, Circuit &out) {
    const double mag = std::abs(theta);
    const double dx = x.depth() + 1, dy = y.depth() + 1;
    const double ax = std::pow(mag, dx / (dx + dy)) / K;
    const double ay = (theta < 0 ? -1 : 1) * std::pow(mag, dy / (dx + dy)) / K;
    for (long c = 0; c < static_cast<long>(K) * K; ++c) {
        emit_exp(x, -ax, K, hbar, out);
        emit_exp(y, -ay, K, hbar, out);
        emit_exp(x, ax, K, hbar, out);
        emit_exp(y, ay, K, hbar, out);
    }
}

CommNode factor_node(const QuadPoly &h) {
    std::vector<CommNode> t = commutator_terms(h);
    if (t.empty()) throw UnsynthesizableFactor("commutator: empty factor");
    if (t.size() == 1) return t[0];
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (!commutator(t[i].expand(), t[j].expand()).is_zero())
                throw UnsynthesizableFactor("commutator: factor " + h.str() + " has non-commuting terms");
    CommNode n;
    n.kind = CommNode::Kind::Sum;
    n.rule = "sum";
    n.kids = std::move(t);
    return n;
}

bool terms_commute(const std::vector<QuadPoly> &t) {
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (!commutator(t[i], t[j]).is_zero()) return false;
    return true;
}

std::vector<QuadPoly> split_terms(const QuadPoly &h) {
    std::vector<QuadPoly> t;
    for (const auto &[m, c] : h.terms())
        if (!m.factors.empty()) t.push_back(QuadPoly(m, c));
    return t;
}

double nominal_error(int levels, double t, int K) { return kCommConst * levels * levels * std::abs(t) / K; }

ExpansionTrace trace_of(const CommNode &n, int K) {
    ExpansionTrace tr;
    tr.K = K;
    tr.count = node_count(n, K);
    switch (n.kind) {
    case CommNode::Kind::Leaf:
        tr.label = n.leaf.str();
        tr.repetitions = 1;
        return tr;
    case CommNode::Kind::Bracket:
        tr.label = n.rule;
        tr.repetitions = 2.0 * K * K;
        break;
    case CommNode::Kind::Sum:
        tr.label = n.rule;
        tr.repetitions = 1;
        break;
    }
    for (const auto &k : n.kids) tr.children.push_back(trace_of(k, K));
    return tr;
}

struct Plan {
    std::vector<CommNode> nodes;
    bool commuting = true;
    int levels = 0;
    int K_outer = 1;
    int K_inner = 1;
};

Plan plan_for(const QuadPoly &h, const ApproximationBudget &b) {
    if (!(b.epsilon > 0)) throw std::invalid_argument("commutator: epsilon must be positive");
    if (b.K_outer < 0 || b.K_inner < 0) throw std::invalid_argument("commutator: K must be >= 1");
    Plan p;
    p.nodes = commutator_terms(h);
    std::vector<QuadPoly> polys;
    int depth = 0;
    for (const auto &n : p.nodes) {
        polys.push_back(n.expand());
        depth = std::max(depth, n.depth());
    }
    p.commuting = terms_commute(polys);
    p.levels = depth + (p.commuting ? 0 : 1);
    const int k = auto_K(p.levels, b.t, b.epsilon);
    if (depth > 0) p.K_inner = b.K_inner > 0 ? b.K_inner : k;
    if (!p.commuting) p.K_outer = b.K_outer > 0 ? b.K_outer : k;
    return p;
}

}  // namespace

int CommNode::depth() const {
    int d = 0;
    for (const auto &k : kids) d = std::max(d, k.depth());
    return kind == Kind::Bracket ? d + 1 : d;
}

QuadPoly CommNode::expand() const {
    switch (kind) {
    case Kind::Leaf:
        return leaf.normal();
    case Kind::Bracket:
        return commutator(kids[0].expand(), kids[1].expand()) * (Coeff::i_unit() * w);
    case Kind::Sum:
        break;
    }
    QuadPoly s;
    for (const auto &k : kids) s += k.expand();
    return s;
}

bool is_primitive(const QuadMonomial &m) {
    if (m.order != QuadMonomial::Order::Normal || m.factors.empty() || m.is_mixed()) return false;
    if (m.factors.size() == 1) return m.degree() <= 3;
    return m.factors.size() == 2 && m.degree() == 2;
}

CommNode commutator_form(const QuadMonomial &m) {
    if (m.factors.empty()) throw IneligibleTerm("commutator: constant term has no commutator form");
    if (m.order == QuadMonomial::Order::Symmetrized && m.is_mixed()) {
        auto [n, rest] = form_sym(m);
        if (!rest.is_zero())
            throw IneligibleTerm("commutator: " + m.str() + " leaves lower-order terms; use commutator_terms");
        return n;
    }
    if (m.is_mixed() || m.order == QuadMonomial::Order::Symmetrized)
        throw IneligibleTerm("commutator: mixed x/p term " + m.str() + " must be given as sym(x^m*p^n)");
    return form_pure(m);
}

std::vector<CommNode> commutator_terms(const QuadPoly &h) {
    QuadPoly src = h;
    for (const auto &[m, c] : h.terms())
        if (m.is_mixed() && m.order == QuadMonomial::Order::Normal) {
            src = h.symmetrized();
            break;
        }
    std::vector<CommNode> out;
    for (const auto &[m, c] : src.terms()) {
        if (m.factors.empty()) continue;  // global phase
        if (!c.is_real()) throw std::invalid_argument("commutator: coefficient of " + m.str() + " is not real");
        if (m.order == QuadMonomial::Order::Symmetrized && m.is_mixed()) {
            auto [n, rest] = form_sym(m);
            out.push_back(scaled(std::move(n), c));
            for (auto &r : commutator_terms(rest.symmetrized() * c)) out.push_back(std::move(r));
            continue;
        }
        out.push_back(scaled(commutator_form(m), c));
    }
    return out;
}

int auto_K(int levels, double t, double epsilon) {
    if (levels <= 0) return 1;
    return std::max(1, static_cast<int>(std::ceil(kCommConst * levels * levels * std::abs(t) / epsilon)));
}

TrotterSplit trotter_split(const QuadPoly &h, double t, int K) {
    if (K < 1) throw std::invalid_argument("trotter_split: K must be >= 1");
    TrotterSplit s;
    s.terms = split_terms(h);
    s.exact = terms_commute(s.terms);
    s.K = s.exact ? 1 : K;
    s.step = t / s.K;
    s.error_bound = s.exact ? 0.0 : nominal_error(1, t, s.K);
    return s;
}

Circuit group_commutator(const QuadPoly &a, const QuadPoly &b, double t, int K, double hbar) {
    if (K < 1) throw std::invalid_argument("group_commutator: K must be >= 1");
    Circuit c;
    c.hbar = hbar;
    c.num_modes = std::max(a.num_modes(), b.num_modes());
    emit_group(factor_node(a), factor_node(b), t * t, K, hbar, c);
    return c;
}

Circuit nested_group_commutator(const QuadPoly &b, const QuadPoly &a, double t, int K, double hbar) {
    if (K < 1) throw std::invalid_argument("nested_group_commutator: K must be >= 1");
    Circuit c;
    c.hbar = hbar;
    c.num_modes = std::max(a.num_modes(), b.num_modes());
    const CommNode bn = factor_node(b);
    // i t^3 [B, [B, A]] = t^3 [B, i[B, A]]
    emit_group(bn, bracket(bn, factor_node(a), "inner"), t * t * t, K, hbar, c);
    return c;
}

void emit_exp(const CommNode &n, double s, int K, double hbar, Circuit &out) {
    switch (n.kind) {
    case CommNode::Kind::Leaf:
        emit_leaf(n.leaf, s, hbar, out);
        return;
    case CommNode::Kind::Sum:
        for (const auto &k : n.kids) emit_exp(k, s, K, hbar, out);
        return;
    case CommNode::Kind::Bracket:
        // e^{i s i w [a, b]} = e^{-s w [a, b]}
        emit_group(n.kids[0], n.kids[1], -s * n.w.eval_real(hbar), K, hbar, out);
        return;
    }
}

double node_count(const CommNode &n, int K) {
    switch (n.kind) {
    case CommNode::Kind::Leaf:
        return 1;
    case CommNode::Kind::Bracket:
        return 2.0 * K * K * (node_count(n.kids[0], K) + node_count(n.kids[1], K));
    case CommNode::Kind::Sum:
        break;
    }
    double s = 0;
    for (const auto &k : n.kids) s += node_count(k, K);
    return s;
}

ExpansionTrace expansion_trace(const QuadPoly &h, const ApproximationBudget &b) {
    Plan p = plan_for(h, b);
    ExpansionTrace tr;
    tr.label = p.commuting ? "commuting" : "trotter";
    tr.K = p.K_outer;
    tr.repetitions = p.K_outer;
    for (const auto &n : p.nodes) {
        tr.children.push_back(trace_of(n, p.K_inner));
        tr.count += tr.children.back().count;
    }
    tr.count *= p.K_outer;
    return tr;
}

DecompositionReport compile_approximate(const QuadPoly &h, const ApproximationBudget &b, double hbar,
                                        bool materialize) {
    Plan p = plan_for(h, b);
    double count = 0;
    for (const auto &n : p.nodes) count += node_count(n, p.K_inner);
    count *= p.K_outer;

    DecompositionReport rep;
    rep.method = "commutator";
    rep.closed_form_count = count;
    rep.repetitions = {{"K_outer", p.K_outer}, {"K_inner", p.K_inner}, {"levels", p.levels}};
    if (p.levels > 0) {
        const bool nested = p.levels > (p.commuting ? 0 : 1);
        int k = p.commuting ? p.K_inner : p.K_outer;
        if (nested) k = std::min(k, p.K_inner);
        rep.error_bound = nominal_error(p.levels, b.t, k);
    }
    rep.circuit.hbar = hbar;
    rep.circuit.num_modes = std::max(1, h.num_modes());
    if (materialize && count <= kMaxMaterialized) {
        for (int r = 0; r < p.K_outer; ++r)
            for (const auto &n : p.nodes) emit_exp(n, b.t / p.K_outer, p.K_inner, hbar, rep.circuit);
        rep.counts = count_gates(rep.circuit);
    } else {
        rep.counts.total_excluding_fourier = count < 9e18 ? static_cast<long long>(count) : -1;
        rep.notes.push_back("circuit not materialized; counts are closed form");
    }
    return rep;
}

}  // namespace cvgate
