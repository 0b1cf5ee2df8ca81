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

#include <optional>
#include <string>
#include <vector>

#include "cvgate/circuit.hpp"
#include "cvgate/quad_poly.hpp"

namespace cvgate {

/// y -> U^dag y U on the generators of the touched modes; absent entries are fixed.
struct HeisenbergMap {
    std::map<int, QuadPoly> x;
    std::map<int, QuadPoly> p;
};

/// Exact generator G with gate = exp(iG); nullopt for Fourier gates. Throws
/// std::invalid_argument when the gate carries no exact parameters or its kind
/// has no polynomial generator (D, T, BS, U, R).
std::optional<QuadPoly> gate_generator(const Gate &g);
HeisenbergMap gate_map(const Gate &g);

/// Adjoint series sum_n (1/n!) ad_{-iG}^n y, which must terminate within max_order.
HeisenbergMap generator_map(const QuadPoly &g, int max_order = 64);

/// Map of (second . first), i.e. `first` applied first.
HeisenbergMap compose(const HeisenbergMap &first, const HeisenbergMap &second);
bool equal_maps(const HeisenbergMap &a, const HeisenbergMap &b);

/// A contiguous run of gates together with a claim about the product.
/// Children partition the run in order; a block without children covers one gate.
struct Block {
    std::string label;
    size_t size = 0;
    /// Claim: product of the run == exp(i * generator) up to global phase.
    std::optional<QuadPoly> generator;
    std::vector<Block> children;
};

/// Gates with the claim tree that justifies them.
struct Plan {
    std::vector<Gate> gates;
    Block block;
};

Plan plan_leaf(const Gate &g);
Plan plan_seq(const std::string &label, const std::vector<Plan> &parts,
              std::optional<QuadPoly> generator = std::nullopt);
/// [outer, inner, inverse(outer)] claiming exp(i * generator).
Plan plan_conj(const std::string &label, const Plan &outer, const Plan &inner, const QuadPoly &generator);
Plan plan_inverse(const Plan &p);
/// Wraps with F on `mode` so the generator undergoes x -> -p, p -> x.
Plan plan_fourier_frame(const Plan &inner, int mode);

struct CheckResult {
    bool ok = true;
    std::string detail;  // path of the first failing block
};

/// Verifies every claim bottom-up; leaves are checked against their gate.
CheckResult verify_plan(const Plan &p);

/// Gate-by-gate map of a circuit; only practical for short circuits.
HeisenbergMap circuit_map(const std::vector<Gate> &gates);

}  // namespace cvgate
