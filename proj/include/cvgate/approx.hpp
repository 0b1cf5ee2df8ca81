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

#include <string>
#include <vector>

#include "cvgate/circuit.hpp"
#include "cvgate/quad_poly.hpp"
#include "cvgate/report.hpp"

namespace cvgate {

/// A Hermitian operator written with nested commutators: a leaf whose
/// exponential is one gate (up to Fourier frames), i w [a, b], or a sum of
/// mutually commuting parts.
struct CommNode {
    enum class Kind { Leaf, Bracket, Sum };

    Kind kind = Kind::Leaf;
    QuadPoly leaf;
    Coeff w{1};
    std::vector<CommNode> kids;
    std::string rule;

    int depth() const;
    QuadPoly expand() const;
};

/// Single gate up to Fourier frames: pure per-mode powers, one mode of
/// degree <= 3 or two modes of degree one each.
bool is_primitive(const QuadMonomial &m);

/// Exact commutator form of a Hermitian monomial (coefficient one).
/// Throws IneligibleTerm when no rewrite identity applies.
CommNode commutator_form(const QuadMonomial &m);

/// Commutator forms of every term; constant terms (a global phase) are
/// dropped and lower-order remainders of the symmetrized rule become extra
/// terms.
std::vector<CommNode> commutator_terms(const QuadPoly &h);

constexpr double kCommConst = 1.9e-3;

struct ApproximationBudget {
    double epsilon = 1e-3;
    double t = 1.0;
    /// 0 selects K from epsilon.
    int K_outer = 0;
    int K_inner = 0;
};

/// K = ceil(kCommConst * L^2 * |t| / epsilon) for an L-level expansion.
int auto_K(int levels, double t, double epsilon);

struct TrotterSplit {
    std::vector<QuadPoly> terms;
    int K = 1;
    double step = 0.0;
    bool exact = false;
    double error_bound = 0.0;
};

/// (prod_j e^{i (t/K) H_j})^K, terms in canonical monomial order. Commuting
/// terms collapse to a single repetition with zero error.
TrotterSplit trotter_split(const QuadPoly &h, double t, int K);

/// (e^{i(t/K)B} e^{i(t/K)A} e^{-i(t/K)B} e^{-i(t/K)A})^{K^2} ~ e^{t^2 [A, B]}.
Circuit group_commutator(const QuadPoly &a, const QuadPoly &b, double t, int K, double hbar = 2.0);
/// e^{i t^3 [B, [B, A]]}; the inner factor is itself a group commutator.
Circuit nested_group_commutator(const QuadPoly &b, const QuadPoly &a, double t, int K, double hbar = 2.0);

/// Gates for e^{i s N}; every bracket uses K^2 cells.
void emit_exp(const CommNode &n, double s, int K, double hbar, Circuit &out);
/// Non-Fourier gates emit_exp produces.
double node_count(const CommNode &n, int K);

struct ExpansionTrace {
    std::string label;
    int K = 1;
    /// Each child's count is multiplied by this.
    double repetitions = 1;
    double count = 0;
    std::vector<ExpansionTrace> children;
};

ExpansionTrace expansion_trace(const QuadPoly &h, const ApproximationBudget &b);

/// Circuits whose closed-form count exceeds this are counted, not built.
constexpr double kMaxMaterialized = 2e6;

DecompositionReport compile_approximate(const QuadPoly &h, const ApproximationBudget &b, double hbar = 2.0,
                                        bool materialize = true);

}  // namespace cvgate
