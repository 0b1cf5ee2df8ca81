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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cvgate/coeff.hpp"

namespace cvgate {

/// x_mode^dx p_mode^dp. Modes are 0-based; text uses 1-based labels.
struct ModePower {
    int mode = 0;
    int dx = 0;
    int dp = 0;
    friend bool operator==(const ModePower &, const ModePower &) = default;
};

/// Product over modes of x^dx p^dp, either x-before-p (Normal) or the
/// two-term symmetrization m + m^dagger (Symmetrized).
struct QuadMonomial {
    enum class Order { Normal, Symmetrized };

    std::vector<ModePower> factors;  // sorted by mode, no (0,0) entries
    Order order = Order::Normal;

    static QuadMonomial one() { return {}; }
    static QuadMonomial x(int mode, int k = 1);
    static QuadMonomial p(int mode, int k = 1);
    static QuadMonomial from_powers(std::vector<ModePower> f, Order o = Order::Normal);

    int degree() const;
    bool is_mixed() const;  // some mode carries both x and p
    bool has_p() const;
    bool has_x() const;
    const ModePower *find(int mode) const;
    /// Product with a commuting monomial (modes must be disjoint).
    QuadMonomial times_disjoint(const QuadMonomial &o) const;

    std::string str() const;  // e.g. "x1^2*p3", "sym(x1^2*p1)"

    friend bool operator==(const QuadMonomial &a, const QuadMonomial &b) {
        return a.order == b.order && a.factors == b.factors;
    }
    friend bool operator<(const QuadMonomial &a, const QuadMonomial &b);
};

/// Polynomial in quadratures with coefficients exact in hbar.
///
/// Terms are kept sparse; symmetrized monomials are stored with their tag and
/// only expanded by normal(). Equality compares normal forms.
class QuadPoly {
  public:
    using TermMap = std::map<QuadMonomial, Coeff>;

    QuadPoly() = default;
    QuadPoly(const Coeff &c);
    QuadPoly(const QuadMonomial &m, const Coeff &c = Coeff(1));

    static QuadPoly x(int mode, int k = 1) { return QuadPoly(QuadMonomial::x(mode, k)); }
    static QuadPoly p(int mode, int k = 1) { return QuadPoly(QuadMonomial::p(mode, k)); }
    static QuadPoly sym(const QuadMonomial &m, const Coeff &c = Coeff(1));

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    /// One past the largest mode index used.
    int num_modes() const;
    std::set<int> modes() const;
    bool is_x_only() const;
    bool is_real() const;  // every coefficient real

    void add_term(const QuadMonomial &m, const Coeff &c);

    QuadPoly &operator+=(const QuadPoly &o);
    QuadPoly &operator-=(const QuadPoly &o);
    QuadPoly &operator*=(const Coeff &c);
    QuadPoly operator-() const;
    friend QuadPoly operator+(QuadPoly a, const QuadPoly &b) { return a += b; }
    friend QuadPoly operator-(QuadPoly a, const QuadPoly &b) { return a -= b; }
    friend QuadPoly operator*(QuadPoly a, const Coeff &c) { return a *= c; }
    friend QuadPoly operator*(const Coeff &c, QuadPoly a) { return a *= c; }
    /// Operator product, result in normal form.
    friend QuadPoly operator*(const QuadPoly &a, const QuadPoly &b);
    friend bool operator==(const QuadPoly &a, const QuadPoly &b);
    friend bool operator!=(const QuadPoly &a, const QuadPoly &b) { return !(a == b); }

    /// Every term x-before-p, symmetrized tags expanded.
    QuadPoly normal() const;
    /// Formal adjoint, in normal form.
    QuadPoly adjoint() const;
    bool is_hermitian() const;
    /// Display form: mixed terms rewritten as (c/2) sym(m) plus exact
    /// lower-order corrections, recursively.
    QuadPoly symmetrized() const;
    QuadPoly pow(int n) const;

    /// Coefficient of a monomial in the normal form.
    Coeff coefficient(const QuadMonomial &m) const;

    std::string str() const;

  private:
    TermMap terms_;
};

inline std::ostream &operator<<(std::ostream &os, const QuadPoly &p) { return os << p.str(); }

/// [a, b] = ab - ba, in normal form.
QuadPoly commutator(const QuadPoly &a, const QuadPoly &b);

/// x_mode -> -p_mode, p_mode -> x_mode. Throws std::out_of_range when mode < 0
/// or (num_modes >= 0 and mode >= num_modes).
QuadPoly fourier_conjugate(const QuadPoly &p, int mode, int num_modes = -1);

/// Algebra homomorphism fixed by the images of x_j and p_j. Modes missing from
/// the maps are left unchanged. Images of distinct generators are assumed to
/// satisfy the canonical relations (checked elsewhere).
QuadPoly substitute(const QuadPoly &p, const std::map<int, QuadPoly> &x_img,
                    const std::map<int, QuadPoly> &p_img);

/// d/dx_mode of an x-only polynomial.
QuadPoly derivative_x(const QuadPoly &p, int mode);

}  // namespace cvgate
