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

#include <stdexcept>
#include <string>

namespace cvgate {

/// Target outside what the chosen method covers. The CLI maps this family to exit code 2.
struct IneligibleTarget : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnreachablePower : IneligibleTarget {
    using IneligibleTarget::IneligibleTarget;
};
struct RecursionUnsupported : IneligibleTarget {
    using IneligibleTarget::IneligibleTarget;
};
struct IneligibleTerm : IneligibleTarget {
    using IneligibleTarget::IneligibleTarget;
};
struct UnsynthesizableFactor : IneligibleTarget {
    using IneligibleTarget::IneligibleTarget;
};

struct NonSymplecticInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonUnitaryInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionOverflow : std::length_error {
    using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &msg, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

}  // namespace cvgate
