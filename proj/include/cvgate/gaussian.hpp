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

#include <Eigen/Dense>
#include <json.hpp>
#include <utility>

#include "cvgate/circuit.hpp"
#include "cvgate/quad_poly.hpp"

namespace cvgate {

/// exp[(i/hbar)(r^T H r / 2 + r^T rbar)], r = (x_1..x_M, p_1..p_M).
struct QuadraticHamiltonian {
    Eigen::MatrixXd H;
    Eigen::VectorXd rbar;

    int modes() const { return static_cast<int>(H.rows()) / 2; }
};

/// Throws std::invalid_argument on bad shapes or asymmetric H.
void check_quadratic(const QuadraticHamiltonian &h);
QuadraticHamiltonian quadratic_from_json(const nlohmann::json &j);
/// H and rbar with Q(H, rbar) = exp(i t g) up to phase; g of degree <= 2, real at hbar.
QuadraticHamiltonian quadratic_from_poly(const QuadPoly &g, double t, int num_modes, double hbar);

template <typename Scalar>
struct EulerFactors {
    using Mat = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
    Mat U1, U2;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> z;  // descending
};

/// e^{-Omega H}.
Eigen::MatrixXd symplectic_from_quadratic(const QuadraticHamiltonian &h);
/// Augmented (2M+1)-square affine action [[S, d], [0, 1]] of Q(H, rbar).
Eigen::MatrixXd affine_from_quadratic(const QuadraticHamiltonian &h);

/// S = O(U1) diag(z, 1/z) O(U2). Throws NonSymplecticInput.
template <typename Scalar>
EulerFactors<Scalar> euler_decompose(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &s);

/// Displacement r and the remaining quadratic part. `affine` is false when H
/// is invertible and Q = W(r) S(H) W(r)^dag; otherwise r is the shift d of the
/// full affine action, applied after S(H).
struct LinearElimination {
    Eigen::VectorXd r;
    Eigen::MatrixXd H;
    bool affine = false;
};
LinearElimination eliminate_linear(const QuadraticHamiltonian &h);

/// Two-mode BS and single-mode R gates whose product is U (Reck order).
Circuit mesh_interferometer(const Eigen::MatrixXcd &u, const std::vector<int> &modes, int num_modes);
/// Emits interferometers as U gates when mesh is false.
Circuit compile_gaussian(const QuadraticHamiltonian &h, double hbar = 2.0, bool mesh = true);

}  // namespace cvgate
