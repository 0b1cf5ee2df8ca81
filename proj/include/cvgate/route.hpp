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

#include "cvgate/quad_poly.hpp"
#include "cvgate/report.hpp"

namespace cvgate {

enum class Method { Gaussian, Exact, ExactGeneralized, Commutator, Kerr, Auto };

std::string method_name(Method m);
/// Throws std::invalid_argument for unknown names.
Method method_from_name(const std::string &s);

struct RouteOptions {
    /// exp(i t h); kept exact for the exact methods.
    Rational t{1};
    double epsilon = 1e-3;
    /// 0 picks K from epsilon.
    int K = 0;
    double hbar = 2.0;
    /// Commutator circuits past kMaxMaterialized are always count-only.
    bool materialize = true;
};

/// Auto routing: quadratic -> gaussian; single eligible monomial -> exact
/// (generalized when classic is ineligible); otherwise commutator.
Method route(const QuadPoly &h);

/// Throws IneligibleTarget naming the violated rule.
DecompositionReport decompose(const QuadPoly &h, Method m, const RouteOptions &opt = {});

}  // namespace cvgate
