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

#include "cvgate/coeff.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cvgate {

namespace {

Rational pow2(int j) {
    Rational r(1);
    if (j >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), j);
    else
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -j);
    r.canonicalize();
    return r;
}

}  // namespace

Coeff::Coeff(long v) {
    if (v != 0) terms_[0] = GaussRational(Rational(v));
}

Coeff::Coeff(const Rational &v) {
    if (sgn(v) != 0) terms_[0] = GaussRational(v);
}

Coeff::Coeff(const GaussRational &v) {
    if (!v.is_zero()) terms_[0] = v;
}

Coeff Coeff::i_unit() { return Coeff(GaussRational(0, 1)); }

Coeff Coeff::sigma_pow(int k) {
    Coeff c;
    c.terms_[k] = GaussRational(1);
    return c;
}

Coeff Coeff::hbar_pow(int k) {
    // hbar^k = sigma^(2k) / 2^k
    Coeff c;
    c.terms_[2 * k] = GaussRational(pow2(-k));
    return c;
}

bool Coeff::is_real() const {
    for (const auto &[k, c] : terms_)
        if (sgn(c.im) != 0) return false;
    return true;
}

bool Coeff::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 0 && sgn(terms_.begin()->second.im) == 0;
}

Rational Coeff::rational_value() const {
    if (!is_rational()) throw std::logic_error("coefficient is not a plain rational: " + str());
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second.re;
}

void Coeff::add_term(int k, const GaussRational &c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

Coeff Coeff::conj() const {
    Coeff r;
    for (const auto &[k, c] : terms_) r.terms_[k] = c.conj();
    return r;
}

Coeff Coeff::operator-() const {
    Coeff r;
    for (const auto &[k, c] : terms_) r.terms_[k] = -c;
    return r;
}

Coeff &Coeff::operator+=(const Coeff &o) {
    for (const auto &[k, c] : o.terms_) add_term(k, c);
    return *this;
}

Coeff &Coeff::operator-=(const Coeff &o) {
    for (const auto &[k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Coeff &Coeff::operator*=(const Coeff &o) {
    Coeff r;
    for (const auto &[k1, c1] : terms_)
        for (const auto &[k2, c2] : o.terms_) r.add_term(k1 + k2, c1 * c2);
    terms_ = std::move(r.terms_);
    return *this;
}

bool operator==(const Coeff &a, const Coeff &b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

Coeff Coeff::divided_by(const Coeff &m) const {
    if (m.terms_.size() != 1) throw std::invalid_argument("division by a non-monomial coefficient");
    const auto &[km, cm] = *m.terms_.begin();
    // 1 / (a + ib) = (a - ib) / (a^2 + b^2)
    Rational n2 = cm.re * cm.re + cm.im * cm.im;
    GaussRational inv(cm.re / n2, -cm.im / n2);
    Coeff r;
    for (const auto &[k, c] : terms_) r.add_term(k - km, c * inv);
    return r;
}

std::complex<double> Coeff::eval(double hbar) const {
    const double sigma = std::sqrt(2.0 * hbar);
    std::complex<double> s = 0;
    for (const auto &[k, c] : terms_)
        s += std::complex<double>(c.re.get_d(), c.im.get_d()) * std::pow(sigma, k);
    return s;
}

double Coeff::eval_real(double hbar) const { return eval(hbar).real(); }

std::string rational_str(const Rational &q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_short(const Rational &q) {
    std::string frac = rational_str(q);
    // finite decimal iff the denominator has no prime factors other than 2, 5
    mpz_class d = q.get_den();
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1 || q.get_den() == 1) return frac;
    int digits = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = q.get_num() * scale / q.get_den();
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s = std::string(digits - s.size() + 1, '0') + s;
    std::string dec = (neg ? "-" : "") + s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    return dec.size() < frac.size() ? dec : frac;
}

Rational rational_from_string(const std::string &text) {
    std::string s = text;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational r(rational_from_string(s.substr(0, slash)) / rational_from_string(s.substr(slash + 1)));
        r.canonicalize();
        return r;
    }
    bool neg = false;
    size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
    mpz_class mant = 0;
    long frac_digits = 0;
    bool any = false, dot = false;
    for (; pos < s.size(); ++pos) {
        char ch = s[pos];
        if (ch >= '0' && ch <= '9') {
            mant = mant * 10 + (ch - '0');
            if (dot) ++frac_digits;
            any = true;
        } else if (ch == '.' && !dot) {
            dot = true;
        } else {
            break;
        }
    }
    if (!any) throw std::invalid_argument("not a number: " + text);
    long expo = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        std::size_t used = 0;
        expo = std::stol(s.substr(pos), &used);
        pos += used;
    }
    if (pos != s.size()) throw std::invalid_argument("not a number: " + text);
    expo -= frac_digits;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(expo)));
    Rational r = expo >= 0 ? Rational(mant * p10) : Rational(mant, p10);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

Rational rational_approx(double x, long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_approx of non-finite value");
    // continued fraction convergents
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double v = x;
    for (int it = 0; it < 40; ++it) {
        double a = std::floor(v);
        long ai = static_cast<long>(a);
        long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        double f = v - a;
        if (f < 1e-12) break;
        v = 1.0 / f;
    }
    Rational r(h1, k1);
    r.canonicalize();
    return r;
}

std::string Coeff::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int k = it->first;
        int j = (k >= 0) ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
        bool odd = (k - 2 * j) == 1;
        GaussRational c = it->second * GaussRational(pow2(j));
        std::string num;
        if (sgn(c.im) == 0) {
            num = rational_str(c.re);
        } else if (sgn(c.re) == 0) {
            num = rational_str(c.im) + "i";
        } else {
            num = "(" + rational_str(c.re) + (sgn(c.im) > 0 ? "+" : "") + rational_str(c.im) + "i)";
        }
        if (!first) os << (num[0] == '-' ? " - " : " + ");
        else if (num[0] == '-') os << "-";
        if (num[0] == '-') num = num.substr(1);
        os << num;
        if (j == 1) os << "*hbar";
        else if (j != 0) os << "*hbar^" << j;
        if (odd) os << "*sqrt(2*hbar)";
        first = false;
    }
    return os.str();
}

}  // namespace cvgate
