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

#include "cvgate/report.hpp"

namespace cvgate {

nlohmann::json to_json(const GateCountReport &r) {
    return {{"counts", r.counts},
            {"total_excluding_fourier", r.total_excluding_fourier},
            {"total_including_fourier", r.total_including_fourier},
            {"ancillae", r.ancillae}};
}

nlohmann::json to_json(const DecompositionReport &r) {
    nlohmann::json j = {{"method", r.method},
                        {"gate_counts", to_json(r.counts)},
                        {"error_bound", r.error_bound},
                        {"symbolic_check", r.symbolic_check}};
    if (r.convention_count >= 0) j["convention_count"] = r.convention_count;
    if (r.closed_form_count >= 0) j["closed_form_count"] = r.closed_form_count;
    if (!r.repetitions.empty()) j["repetitions"] = r.repetitions;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

}  // namespace cvgate
