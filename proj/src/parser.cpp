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


#include "cvgate/parser.hpp"

#include <cctype>
#include <map>
#include <tuple>

#include "cvgate/errors.hpp"

namespace cvgate {

namespace {

constexpr int kMaxMode = 1024;
constexpr long kMaxExponent = 256;
constexpr long kMaxDecimalExponent = 400;

class Parser {
  public:
    Parser(const std::string &s, const ParseOptions &o) : s_(s), opt_(o) {}

    QuadPoly run() {
        QuadPoly out;
        skip();
        if (at_end()) fail("empty expression");
        bool first = true;
        while (!at_end()) {
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = get() == '-';
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            QuadPoly t = term();
            out += neg ? -t : t;
            first = false;
        }
        return out;
    }

  private:
    // one term: numbers, atoms, at most one sym(...)
    QuadPoly term() {
        Rational c(1);
        QuadPoly atoms(Coeff(1));
        bool has_sym = false, has_atom = false;
        for (;;) {
            const size_t at = pos_;
            if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
                c *= number();
            } else if (starts_with("sym")) {
                if (has_sym || has_atom) fail_at(at, "sym(...) must be the only operator factor of its term");
                pos_ += 3;
                skip();
                expect('(');
                QuadMonomial m = monomial_in_sym();
                expect(')');
                atoms = QuadPoly::sym(m);
                has_sym = true;
            } else if (peek() == 'x' || peek() == 'p') {
                if (has_sym) fail_at(at, "sym(...) must be the only operator factor of its term");
                auto [mode, dx, dp] = atom();
                const QuadPoly f = dx ? QuadPoly::x(mode, dx) : QuadPoly::p(mode, dp);
                check_mixing(atoms, mode, dx > 0, at);
                atoms = atoms * f;
                has_atom = true;
            } else {
                fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'");
            }
            skip();
            if (peek() != '*') break;
            get();
            skip();
        }
        return atoms * Coeff(c);
    }

    void check_mixing(const QuadPoly &sofar, int mode, bool is_x, size_t at) {
        if (opt_.allow_mixed) return;
        for (const auto &[m, c] : sofar.terms())
            if (const ModePower *f = m.find(mode); f && (is_x ? f->dp : f->dx))
                fail_at(at, "x and p of mode " + std::to_string(mode + 1) +
                                " mixed outside sym(...); use sym(x^m*p^n) or --method commutator");
    }

    QuadMonomial monomial_in_sym() {
        std::map<int, ModePower> f;
        skip();
        const size_t start = pos_;
        for (;;) {
            skip();
            if (peek() != 'x' && peek() != 'p') fail("expected x<k> or p<k> inside sym(...)");
            auto [mode, dx, dp] = atom();
            ModePower &mp = f[mode];
            mp.mode = mode;
            mp.dx += dx;
            mp.dp += dp;
            if (mp.dx > kMaxExponent || mp.dp > kMaxExponent) fail("exponent too large");
            skip();
            if (peek() != '*') break;
            get();
        }
        std::vector<ModePower> v;
        bool mixed = false;
        for (auto &[k, mp] : f) {
            v.push_back(mp);
            mixed = mixed || (mp.dx && mp.dp);
        }
        if (!mixed) fail_at(start, "sym(...) needs x and p of the same mode");
        return QuadMonomial::from_powers(v);
    }

    std::tuple<int, int, int> atom() {
        const bool is_x = get() == 'x';
        const size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a mode index after x/p");
        long mode = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            mode = mode * 10 + (get() - '0');
            if (mode > kMaxMode) fail_at(at, "mode index too large (max " + std::to_string(kMaxMode) + ")");
        }
        if (mode == 0) fail_at(at, "mode indices start at 1");
        long e = 1;
        skip();
        if (peek() == '^') {
            get();
            skip();
            const size_t ea = pos_;
            if (peek() == '-' || peek() == '+') fail_at(ea, "exponent must be a positive integer");
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
            e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + (get() - '0');
                if (e > kMaxExponent) fail_at(ea, "exponent too large (max " + std::to_string(kMaxExponent) + ")");
            }
            if (e < 1) fail_at(ea, "exponent must be >= 1");
        }
        const int m = static_cast<int>(mode - 1), k = static_cast<int>(e);
        return {m, is_x ? k : 0, is_x ? 0 : k};
    }

    Rational number() {
        const size_t at = pos_;
        Rational r = decimal();
        if (peek() == '/') {
            get();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
            Rational d = decimal();
            if (sgn(d) == 0) fail_at(at, "zero denominator");
            r /= d;
            r.canonicalize();
        }
        return r;
    }

    Rational decimal() {
        const size_t at = pos_;
        std::string lit;
        bool digits = false;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            lit += get();
            digits = true;
        }
        if (peek() == '.') {
            lit += get();
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                lit += get();
                digits = true;
            }
        }
        if (!digits) fail_at(at, "malformed number");
        if (peek() == 'e' || peek() == 'E') {
            lit += get();
            if (peek() == '+' || peek() == '-') lit += get();
            std::string ex;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ex += get();
            if (ex.empty()) fail_at(at, "malformed exponent in number");
            if (ex.size() > 4 || std::stol(ex) > kMaxDecimalExponent) fail_at(at, "number exponent out of range");
            lit += ex;
        }
        return rational_from_string(lit);
    }

    bool starts_with(const char *w) const { return s_.compare(pos_, std::char_traits<char>::length(w), w) == 0; }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    [[noreturn]] void fail(const std::string &msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(size_t at, const std::string &msg) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < at && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    const std::string &s_;
    ParseOptions opt_;
    size_t pos_ = 0;
};

}  // namespace

bool TargetSpec::mixed() const {
    for (char b : basis)
        if (b == 'm') return true;
    return false;
}

TargetSpec parse(const std::string &text, const ParseOptions &opt) {
    TargetSpec spec;
    spec.source = text;
    spec.poly = Parser(text, opt).run();
    spec.basis.assign(spec.poly.num_modes(), '-');
    for (const auto &[m, c] : spec.poly.terms())
        for (const auto &f : m.factors) {
            char &b = spec.basis[f.mode];
            const char here = f.dx && f.dp ? 'm' : (f.dx ? 'x' : 'p');
            b = (b == '-' || b == here) ? here : 'm';
        }
    return spec;
}

std::string format(const QuadPoly &p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto &[m, c] : p.terms()) {
        if (!c.is_rational()) throw std::invalid_argument("format: coefficient " + c.str() + " is not rational");
        Rational q = c.rational_value();
        const bool neg = sgn(q) < 0;
        if (neg) q = -q;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const std::string mono = m.str();
        if (m.factors.empty())
            out += rational_short(q);
        else if (q == 1)
            out += mono;
        else
            out += rational_short(q) + " * " + mono;
    }
    return out;
}

std::string format(const TargetSpec &spec) { return format(spec.poly); }

}  // namespace cvgate
