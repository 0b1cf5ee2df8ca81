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

#include "cvgate/quad_poly.hpp"

namespace cvgate {

struct TargetSpec {
    std::string source;
    QuadPoly poly;
    double t = 1.0;
    /// Per mode (0-based): 'x', 'p', 'm' (both, same mode) or '-' (unused).
    std::vector<char> basis;

    bool mixed() const;
};

struct ParseOptions {
    /// Accept x and p of one mode outside sym(...), multiplied in the written order.
    bool allow_mixed = false;
};

/// Throws ParseError with a 1-based line and column.
TargetSpec parse(const std::string &text, const ParseOptions &opt = {});

/// Canonical text: terms in canonical monomial order, exact coefficients.
/// Requires rational coefficients. Normal-ordered terms mixing x and p of one
/// mode print as written and reparse only with allow_mixed.
std::string format(const QuadPoly &p);
std::string format(const TargetSpec &spec);

}  // namespace cvgate
