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

#include "cvgate/quad_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cvgate {

namespace {

using Factors = std::vector<ModePower>;
using Expansion = std::vector<std::pair<Coeff, Factors>>;

Rational binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

// (-i hbar)^k
Coeff contraction(int k) {
    static const GaussRational phases[4] = {GaussRational(1), GaussRational(0, -1), GaussRational(-1),
                                            GaussRational(0, 1)};
    return Coeff(phases[k % 4]) * Coeff::hbar_pow(k);
}

// p^b x^c on one mode, as sum of x^(c-k) p^(b-k).
std::vector<std::pair<Coeff, ModePower>> reorder_px(int mode, int b, int c, int xa, int pd) {
    // full word: x^xa (p^b x^c) p^pd
    std::vector<std::pair<Coeff, ModePower>> out;
    for (int k = 0; k <= std::min(b, c); ++k) {
        Coeff w = Coeff(factorial(k) * binom(b, k) * binom(c, k)) * contraction(k);
        out.push_back({w, ModePower{mode, xa + c - k, pd + b - k}});
    }
    return out;
}

// Cross product of per-mode expansions.
Expansion cross(const std::vector<std::vector<std::pair<Coeff, ModePower>>> &per_mode) {
    Expansion acc{{Coeff(1), {}}};
    for (const auto &choices : per_mode) {
        Expansion next;
        next.reserve(acc.size() * choices.size());
        for (const auto &[c0, f0] : acc) {
            for (const auto &[c1, mp] : choices) {
                Factors f = f0;
                if (mp.dx != 0 || mp.dp != 0) f.push_back(mp);
                next.push_back({c0 * c1, std::move(f)});
            }
        }
        acc = std::move(next);
    }
    return acc;
}

// Product of two normal-ordered monomials.
Expansion mul_normal(const Factors &a, const Factors &b) {
    std::vector<std::vector<std::pair<Coeff, ModePower>>> per_mode;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mode < b[j].mode)) {
            per_mode.push_back({{Coeff(1), a[i]}});
            ++i;
        } else if (i == a.size() || b[j].mode < a[i].mode) {
            per_mode.push_back({{Coeff(1), b[j]}});
            ++j;
        } else {
            // x^a1 p^b1 x^c1 p^d1
            per_mode.push_back(reorder_px(a[i].mode, a[i].dp, b[j].dx, a[i].dx, b[j].dp));
            ++i;
            ++j;
        }
    }
    return cross(per_mode);
}

// Normal form of the reversed word (p before x in every mode).
Expansion reversed_normal(const Factors &f) {
    std::vector<std::vector<std::pair<Coeff, ModePower>>> per_mode;
    for (const auto &mp : f) per_mode.push_back(reorder_px(mp.mode, mp.dp, mp.dx, 0, 0));
    return cross(per_mode);
}

std::string atom_str(char sym, int mode, int k) {
    std::string s = std::string(1, sym) + std::to_string(mode + 1);
    if (k != 1) s += "^" + std::to_string(k);
    return s;
}

}  // namespace

QuadMonomial QuadMonomial::x(int mode, int k) {
    QuadMonomial m;
    if (k > 0) m.factors.push_back({mode, k, 0});
    return m;
}

QuadMonomial QuadMonomial::p(int mode, int k) {
    QuadMonomial m;
    if (k > 0) m.factors.push_back({mode, 0, k});
    return m;
}

QuadMonomial QuadMonomial::from_powers(std::vector<ModePower> f, Order o) {
    std::sort(f.begin(), f.end(), [](const ModePower &a, const ModePower &b) { return a.mode < b.mode; });
    QuadMonomial m;
    for (const auto &mp : f) {
        if (mp.dx < 0 || mp.dp < 0) throw std::invalid_argument("negative exponent");
        if (mp.dx == 0 && mp.dp == 0) continue;
        if (!m.factors.empty() && m.factors.back().mode == mp.mode) {
            if (m.factors.back().dp != 0 && mp.dx != 0)
                throw std::invalid_argument("from_powers: merging would reorder x past p");
            m.factors.back().dx += mp.dx;
            m.factors.back().dp += mp.dp;
        } else {
            m.factors.push_back(mp);
        }
    }
    m.order = o;
    return m;
}

int QuadMonomial::degree() const {
    int d = 0;
    for (const auto &f : factors) d += f.dx + f.dp;
    return d;
}

bool QuadMonomial::is_mixed() const {
    return std::any_of(factors.begin(), factors.end(), [](const ModePower &f) { return f.dx > 0 && f.dp > 0; });
}

bool QuadMonomial::has_p() const {
    return std::any_of(factors.begin(), factors.end(), [](const ModePower &f) { return f.dp > 0; });
}

bool QuadMonomial::has_x() const {
    return std::any_of(factors.begin(), factors.end(), [](const ModePower &f) { return f.dx > 0; });
}

const ModePower *QuadMonomial::find(int mode) const {
    for (const auto &f : factors)
        if (f.mode == mode) return &f;
    return nullptr;
}

QuadMonomial QuadMonomial::times_disjoint(const QuadMonomial &o) const {
    std::vector<ModePower> f = factors;
    for (const auto &mp : o.factors) {
        if (find(mp.mode)) throw std::invalid_argument("times_disjoint: modes overlap");
        f.push_back(mp);
    }
    return from_powers(f, order);
}

std::string QuadMonomial::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto &f : factors) {
        if (f.dx) s += (s.empty() ? "" : "*") + atom_str('x', f.mode, f.dx);
        if (f.dp) s += (s.empty() ? "" : "*") + atom_str('p', f.mode, f.dp);
    }
    return order == Order::Symmetrized ? "sym(" + s + ")" : s;
}

bool operator<(const QuadMonomial &a, const QuadMonomial &b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    size_t n = std::min(a.factors.size(), b.factors.size());
    for (size_t i = 0; i < n; ++i) {
        const auto &fa = a.factors[i], &fb = b.factors[i];
        if (fa.mode != fb.mode) return fa.mode < fb.mode;
        if (fa.dx != fb.dx) return fa.dx > fb.dx;
        if (fa.dp != fb.dp) return fa.dp > fb.dp;
    }
    if (a.factors.size() != b.factors.size()) return a.factors.size() > b.factors.size();
    return a.order < b.order;
}

QuadPoly::QuadPoly(const Coeff &c) { add_term(QuadMonomial::one(), c); }

QuadPoly::QuadPoly(const QuadMonomial &m, const Coeff &c) { add_term(m, c); }

QuadPoly QuadPoly::sym(const QuadMonomial &m, const Coeff &c) {
    QuadMonomial s = m;
    s.order = QuadMonomial::Order::Symmetrized;
    return QuadPoly(s, c);
}

void QuadPoly::add_term(const QuadMonomial &m, const Coeff &c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int QuadPoly::degree() const {
    int d = 0;
    for (const auto &[m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int QuadPoly::num_modes() const {
    int n = 0;
    for (const auto &[m, c] : terms_)
        for (const auto &f : m.factors) n = std::max(n, f.mode + 1);
    return n;
}

std::set<int> QuadPoly::modes() const {
    std::set<int> s;
    for (const auto &[m, c] : terms_)
        for (const auto &f : m.factors) s.insert(f.mode);
    return s;
}

bool QuadPoly::is_x_only() const {
    for (const auto &[m, c] : terms_)
        if (m.has_p()) return false;
    return true;
}

bool QuadPoly::is_real() const {
    for (const auto &[m, c] : terms_)
        if (!c.is_real()) return false;
    return true;
}

QuadPoly &QuadPoly::operator+=(const QuadPoly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
}

QuadPoly &QuadPoly::operator-=(const QuadPoly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
}

QuadPoly &QuadPoly::operator*=(const Coeff &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_) v *= c;
    return *this;
}

QuadPoly QuadPoly::operator-() const {
    QuadPoly r = *this;
    for (auto &[m, v] : r.terms_) v = -v;
    return r;
}

QuadPoly QuadPoly::normal() const {
    QuadPoly r;
    for (const auto &[m, c] : terms_) {
        if (m.order == QuadMonomial::Order::Normal) {
            r.add_term(m, c);
            continue;
        }
        QuadMonomial plain = m;
        plain.order = QuadMonomial::Order::Normal;
        r.add_term(plain, c);
        for (auto &[w, f] : reversed_normal(m.factors)) {
            QuadMonomial mm;
            mm.factors = std::move(f);
            r.add_term(mm, c * w);
        }
    }
    return r;
}

QuadPoly operator*(const QuadPoly &a, const QuadPoly &b) {
    QuadPoly na = a.normal(), nb = b.normal();
    QuadPoly r;
    for (const auto &[ma, ca] : na.terms_) {
        for (const auto &[mb, cb] : nb.terms_) {
            Coeff cab = ca * cb;
            for (auto &[w, f] : mul_normal(ma.factors, mb.factors)) {
                QuadMonomial m;
                m.factors = std::move(f);
                r.add_term(m, cab * w);
            }
        }
    }
    return r;
}

bool operator==(const QuadPoly &a, const QuadPoly &b) {
    QuadPoly d = (a - b).normal();
    return d.is_zero();
}

QuadPoly QuadPoly::adjoint() const {
    QuadPoly r;
    for (const auto &[m, c] : terms_) {
        if (m.order == QuadMonomial::Order::Symmetrized) {
            r.add_term(m, c.conj());
            continue;
        }
        for (auto &[w, f] : reversed_normal(m.factors)) {
            QuadMonomial mm;
            mm.factors = std::move(f);
            r.add_term(mm, c.conj() * w);
        }
    }
    return r.normal();
}

bool QuadPoly::is_hermitian() const { return *this == adjoint(); }

QuadPoly QuadPoly::symmetrized() const {
    QuadPoly work = normal();
    QuadPoly out;
    const Coeff half(Rational(1, 2));
    while (!work.is_zero()) {
        // highest degree first; the map order already sorts by degree desc
        auto it = work.terms_.begin();
        QuadMonomial m = it->first;
        Coeff c = it->second;
        if (!m.is_mixed()) {
            out.add_term(m, c);
            work.terms_.erase(it);
            continue;
        }
        QuadMonomial s = m;
        s.order = QuadMonomial::Order::Symmetrized;
        out.add_term(s, c * half);
        work -= QuadPoly(s, c * half).normal();
    }
    return out;
}

QuadPoly QuadPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    QuadPoly r(Coeff(1));
    QuadPoly base = normal();
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

Coeff QuadPoly::coefficient(const QuadMonomial &m) const {
    QuadPoly n = normal();
    auto it = n.terms_.find(m);
    return it == n.terms_.end() ? Coeff() : it->second;
}

std::string QuadPoly::str() const {
    QuadPoly s = symmetrized();
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : s.terms_) {
        std::string cs = c.str();
        bool simple = c.terms().size() == 1 && c.is_real();
        bool neg = simple && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (!simple) cs = "(" + cs + ")";
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        bool unit = simple && cs == "1";
        if (m.factors.empty()) os << cs;
        else if (unit) os << m.str();
        else os << cs << "*" << m.str();
        first = false;
    }
    return os.str();
}

QuadPoly commutator(const QuadPoly &a, const QuadPoly &b) { return a * b - b * a; }

QuadPoly fourier_conjugate(const QuadPoly &p, int mode, int num_modes) {
    if (mode < 0 || (num_modes >= 0 && mode >= num_modes))
        throw std::out_of_range("fourier_conjugate: mode " + std::to_string(mode) + " out of range");
    std::map<int, QuadPoly> xi{{mode, -QuadPoly::p(mode)}}, pi{{mode, QuadPoly::x(mode)}};
    return substitute(p, xi, pi);
}

QuadPoly substitute(const QuadPoly &p, const std::map<int, QuadPoly> &x_img, const std::map<int, QuadPoly> &p_img) {
    std::map<std::pair<int, int>, std::vector<QuadPoly>> cache;  // (mode, is_p) -> powers
    auto power = [&](int mode, bool is_p, int k) -> const QuadPoly & {
        auto &v = cache[{mode, is_p ? 1 : 0}];
        if (v.empty()) {
            v.push_back(QuadPoly(Coeff(1)));
            const auto &img = is_p ? p_img : x_img;
            auto it = img.find(mode);
            v.push_back(it != img.end() ? it->second.normal() : (is_p ? QuadPoly::p(mode) : QuadPoly::x(mode)));
        }
        while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * v[1]);
        return v[k];
    };
    QuadPoly r;
    const QuadPoly pn = p.normal();
    for (const auto &[m, c] : pn.terms()) {
        QuadPoly t(c);
        for (const auto &f : m.factors) {
            if (f.dx) t = t * power(f.mode, false, f.dx);
            if (f.dp) t = t * power(f.mode, true, f.dp);
        }
        r += t;
    }
    return r;
}

QuadPoly derivative_x(const QuadPoly &p, int mode) {
    QuadPoly r;
    const QuadPoly pn = p.normal();
    for (const auto &[m, c] : pn.terms()) {
        if (m.has_p()) throw std::invalid_argument("derivative_x expects an x-only polynomial");
        const ModePower *f = m.find(mode);
        if (!f) continue;
        std::vector<ModePower> nf;
        for (const auto &g : m.factors) {
            if (g.mode == mode) {
                if (g.dx > 1) nf.push_back({mode, g.dx - 1, 0});
            } else {
                nf.push_back(g);
            }
        }
        r.add_term(QuadMonomial::from_powers(nf), c * Coeff(static_cast<long>(f->dx)));
    }
    return r;
}

}  // namespace cvgate
