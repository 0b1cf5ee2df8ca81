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

#include "cvgate/quad_poly.hpp"

namespace cvgate {

/// c * (sum_i h_i x_i)^s
struct PowerSumTerm {
    Rational coeff;
    std::vector<Rational> weights;
};

struct PowerSumExpansion {
    int s = 0;
    std::vector<PowerSumTerm> terms;
    /// Index of the odd exponent whose range was halved, -1 for the full sum.
    int halved_index = -1;
};

/// prod_i x_i^{s_i} as a signed binomial sum of s-th powers of linear forms,
/// h_i = s_i/2 - v_i. When some s_i is odd the lowest such index has its range
/// halved (mirror terms are identical and grouped).
PowerSumExpansion product_as_power_sum(const std::vector<int> &exponents);

/// Inclusion-exclusion form prod_i x_i = 1/n! sum_S (-1)^{n-|S|} (sum_{i in S} x_i)^n
/// for unit exponents; n = 3 is the seven-term cube identity.
PowerSumExpansion polarization_expansion(int n);

/// sum_terms c (sum_i h_i x_{modes[i]})^s as a polynomial.
QuadPoly expand_power_sum(const PowerSumExpansion &e, const std::vector<int> &modes);

}  // namespace cvgate
