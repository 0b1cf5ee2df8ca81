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

#pragma once

#include <complex>
#include <map>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace cvgate {

using Rational = mpq_class;

/// Exact complex rational a + i b.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() : re(0), im(0) {}
    GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussRational conj() const { return {re, -im}; }

    friend GaussRational operator+(const GaussRational &a, const GaussRational &b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational &a, const GaussRational &b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator*(const GaussRational &a, const GaussRational &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussRational operator-() const { return {-re, -im}; }
    friend bool operator==(const GaussRational &a, const GaussRational &b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Laurent polynomial in sigma = sqrt(2 hbar) with complex rational coefficients.
///
/// hbar itself is sigma^2 / 2, so every coefficient that shows up in the
/// quadrature algebra (including the sqrt(hbar) factors produced by ladder
/// operators) stays exact.
class Coeff {
  public:
    Coeff() = default;
    Coeff(long v);
    Coeff(const Rational &v);
    Coeff(const GaussRational &v);

    static Coeff i_unit();
    /// hbar^k (k may be negative).
    static Coeff hbar_pow(int k);
    /// sigma^k = (2 hbar)^(k/2).
    static Coeff sigma_pow(int k);

    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    bool is_rational() const;  // real and free of hbar
    /// Single term c * sigma^k with c rational (real).
    bool is_monomial() const { return terms_.size() == 1; }

    Rational rational_value() const;  // requires is_rational()
    const std::map<int, GaussRational> &terms() const { return terms_; }

    Coeff conj() const;
    Coeff operator-() const;
    Coeff &operator+=(const Coeff &o);
    Coeff &operator-=(const Coeff &o);
    Coeff &operator*=(const Coeff &o);

    friend Coeff operator+(Coeff a, const Coeff &b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff &b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff &b) { return a *= b; }
    friend bool operator==(const Coeff &a, const Coeff &b);
    friend bool operator!=(const Coeff &a, const Coeff &b) { return !(a == b); }

    /// Divide by a monomial coefficient (single term, nonzero).
    Coeff divided_by(const Coeff &monomial) const;

    std::complex<double> eval(double hbar) const;
    double eval_real(double hbar) const;

    /// Human readable, hbar based (e.g. "-1/2*hbar^2", "3*sqrt(2*hbar)").
    std::string str() const;

  private:
    void add_term(int k, const GaussRational &c);
    std::map<int, GaussRational> terms_;
};

inline std::ostream &operator<<(std::ostream &os, const Coeff &c) { return os << c.str(); }

std::string rational_str(const Rational &q);
/// Shortest exact rendering: finite decimal if strictly shorter than a/b.
std::string rational_short(const Rational &q);
/// Exact conversion of a decimal string such as "-0.05", "1e-3" or "3/7".
Rational rational_from_string(const std::string &s);
/// Small-denominator rational close to x (used for free gadget parameters).
Rational rational_approx(double x, long max_den = 32);

}  // namespace cvgate
