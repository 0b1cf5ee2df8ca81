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

#include "cvgate/circuit.hpp"

namespace cvgate {

/// {"num_modes", "gates": [{"kind", "modes", "params"}], "ancillae",
///  "convention": {"hbar", "order": "first-applied-first"}}
nlohmann::json to_json(const Circuit &c);
/// Parses and validates; throws std::invalid_argument or nlohmann exceptions.
Circuit circuit_from_json(const nlohmann::json &j);

}  // namespace cvgate
