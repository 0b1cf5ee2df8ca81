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

#include "cvgate/quad_poly.hpp"

namespace cvgate {

/// -(chi/2) a^dag^2 a^2 + delta a^dag a + beta (a + a^dag)
struct DrivenKerrParams {
    double chi = 1.0;
    double delta = 0.0;
    double beta = 0.0;
};

/// Squeeze by lambda, then displace by y.
struct FrameParams {
    double lambda = 1.0;
    double y = 0.0;
};

/// T^dag(log lambda) D^dag(y) H D(y) T(log lambda) on mode 0, exact in the
/// rational values of the (binary) parameters.
QuadPoly effective_hamiltonian(const DrivenKerrParams &k, const FrameParams &f);

struct Cancellation {
    double delta = 0.0;
    double beta = 0.0;
};

/// Zeroes the x^2 and x terms of the effective Hamiltonian.
Cancellation solve_cancellation(double chi, double y);

struct CubicResidual {
    double chi = 1.0;
    double lambda = 1.0;
    double y = 1.0;
    double hbar = 2.0;
    double cubic_coeff = 0.0;
    /// |x^4| / |x^3|
    double quartic_ratio = 0.0;
    /// |p^2| / |x^3|
    double p2_ratio = 0.0;
    /// Largest remaining |coefficient| / |x^3|.
    double tail_ratio = 0.0;
    Cancellation cancellation;
};

/// y = lambda^q with the cancellation applied.
CubicResidual cubic_residual(double chi, double lambda, double q = 3.0, double hbar = 2.0);

nlohmann::json to_json(const CubicResidual &r);

/// Largest entry of T^dag D^dag H D T - build_operator(effective) on the
/// lowest `levels` Fock states; the effective operator is truncated at
/// `cutoff`, the frame product is taken as an exact block.
double frame_fock_deviation(const DrivenKerrParams &k, const FrameParams &f, int cutoff, int levels, double hbar);

}  // namespace cvgate
