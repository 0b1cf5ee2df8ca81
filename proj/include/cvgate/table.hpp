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
#include <string>
#include <vector>

namespace cvgate {

enum class CellStatus {
    Exact,      // equals the printed value
    Band,       // within 3x of the printed value
    Dash,       // not covered, as printed
    Ledger,     // differs; the cell carries a counting ledger
    Mismatch,   // differs with no explanation
};

std::string status_name(CellStatus s);

struct TableCell {
    /// -1 for "not covered".
    double value = -1;
    double printed = -1;
    CellStatus status = CellStatus::Mismatch;
    std::vector<std::string> ledger;

    bool ok() const { return status != CellStatus::Mismatch; }
};

struct TableRow {
    std::string target;  // e.g. "x_j^2 x_k x_l"
    std::vector<int> exponents;
    TableCell commutator, exact, generalized;
};

/// All rows of the published gate-count table. Counts are closed-form; no
/// approximate circuit is built.
std::vector<TableRow> gate_count_table(double epsilon = 1e-3);

nlohmann::json to_json(const TableRow &r);
std::string render_table(const std::vector<TableRow> &rows);

}  // namespace cvgate
