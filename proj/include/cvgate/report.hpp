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

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "cvgate/circuit.hpp"

namespace cvgate {

struct DecompositionReport {
    std::string method;
    Circuit circuit;
    GateCountReport counts;
    /// Zero for exact methods.
    double error_bound = 0.0;
    /// Count under the published per-term convention, -1 when not defined.
    long long convention_count = -1;
    /// Set when the circuit was checked symbolically against the target.
    bool symbolic_check = false;
    std::map<std::string, long long> repetitions;
    /// Closed-form non-Fourier count; may exceed what is materialized.
    double closed_form_count = -1;
    std::vector<std::string> notes;
};

nlohmann::json to_json(const GateCountReport &r);
nlohmann::json to_json(const DecompositionReport &r);

}  // namespace cvgate
