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

#include <vector>

#include "cvgate/heisenberg.hpp"
#include "cvgate/report.hpp"

namespace cvgate {

enum class ExactMethod { Classic, Generalized };

/// t * prod_i q_i^{s_i} with q_i = x_i or p_i; exponents[i] == 0 means mode i is idle.
struct MonomialTarget {
    std::vector<int> exponents;
    std::vector<bool> p_basis;
    Rational t{1};

    int active_modes() const;
    int total_degree() const;
    QuadPoly generator() const;
};

/// Single-term target from a polynomial; IneligibleTarget for sums, constants,
/// symmetrized terms and same-mode x/p mixtures.
MonomialTarget monomial_target(const QuadPoly &h, const Rational &t);

// Building blocks. Every returned plan claims its generator exactly; numeric
// gate parameters are evaluated at `hbar`, which also picks balanced scales.

/// exp(i c x_j^n). Even n >= 4 needs an ancilla != j.
Plan single_mode_power(const Coeff &c, int n, int j, int ancilla, double hbar);
/// exp(i c p_k x_j^2), nine non-Fourier gates.
Plan px2_gate(const Coeff &c, int k, int j, double hbar);
/// exp(i c p_k x_j^n) for n >= 3 via the five-factor two-mode identity.
Plan general_two_mode(const Coeff &c, int n, int k, int j, double hbar);
/// exp(i c p_k x_j^n), any n >= 1.
Plan p_times_power(const Coeff &c, int n, int k, int j, double hbar);
/// exp(i c x_k x_j^n), any n >= 1.
Plan x_times_power(const Coeff &c, int n, int k, int j, double hbar);
/// exp(i c x_j^2 x_k^2m), m >= 1.
Plan square_times_even(const Coeff &c, int m, int j, int k, double hbar);

/// Plan for the target; throws IneligibleTarget naming the violated rule.
Plan synthesize_plan(const MonomialTarget &target, ExactMethod method, double hbar, int &num_modes,
                     std::vector<int> &ancillae);
DecompositionReport synthesize_product(const MonomialTarget &target, ExactMethod method, double hbar = 2.0,
                                       bool symbolic_check = true);

// Closed-form non-Fourier counts of the constructions above.
long long cost_power(int n);           // exp(i c x^n)
long long cost_linear_power(int n);    // exp(i c x_k x_j^n)
/// Count of the circuit synthesize_product emits; -1 when ineligible.
long long exact_count(const std::vector<int> &exponents, ExactMethod method);
/// #terms * (cost_power(s) + 2(n-1)), the per-term convention used for published
/// comparisons of the power-sum method; -1 when ineligible.
long long generalized_convention_count(const std::vector<int> &exponents);

}  // namespace cvgate
