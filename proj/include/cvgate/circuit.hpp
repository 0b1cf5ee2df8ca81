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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cvgate/coeff.hpp"

namespace cvgate {

/// Gate kinds. Generators (hbar explicit):
///   R(th)  exp(i th/(2hbar) (x^2+p^2))     Z(t)  exp(i t/hbar x)
///   P(t)   exp(i t/(2hbar) x^2)            V(t)  exp(i t/(3hbar) x^3)
///   CZ(t)  exp(i t/hbar x_j x_k)           D(a)  exp(a a^dag - a^* a), params [re, im]
///   T(s)   exp(s/2 (a^dag^2 - a^2))        BS(th) U([[cos, i sin],[i sin, cos]])
///   U      interferometer, a -> U a        F(+1) = R(pi/2), F(-1) = R(-pi/2)
enum class GateKind { R, Z, P, V, CZ, D, T, BS, U, F };

std::string kind_name(GateKind k);
GateKind kind_from_name(const std::string &s);
bool is_gaussian(GateKind k);

struct Gate {
    GateKind kind = GateKind::R;
    std::vector<int> modes;
    std::vector<double> params;
    Eigen::MatrixXcd unitary;  // kind U only
    /// Exact parameters (hbar symbolic) when the gate came from an exact
    /// construction; same layout as params. Used by the Heisenberg checker.
    std::vector<Coeff> exact;

    int arity() const;
};

// Gate factories. The exact overloads also fill numeric params at `hbar`.
Gate make_gate(GateKind k, std::vector<int> modes, std::vector<double> params);
Gate make_exact(GateKind k, std::vector<int> modes, const Coeff &param, double hbar);
Gate make_fourier(int mode, bool dagger = false);
Gate make_interferometer(std::vector<int> modes, const Eigen::MatrixXcd &u);

struct Circuit {
    int num_modes = 0;
    std::vector<Gate> gates;
    std::vector<int> ancillae;
    double hbar = 2.0;

    void append(const Gate &g);
    void append(const Circuit &c);
    bool empty() const { return gates.empty(); }
};

struct GateCountReport {
    std::map<std::string, long long> counts;
    long long total_excluding_fourier = 0;
    long long total_including_fourier = 0;
    int ancillae = 0;
};

Gate inverse(const Gate &g);
Circuit inverse(const Circuit &c);
GateCountReport count_gates(const Circuit &c);
/// outer^dag . inner . outer, emitted as [outer, inner, inverse(outer)].
Circuit conjugate(const Circuit &outer, const Circuit &inner);
/// Drops adjacent F / F^dag pairs on the same mode (other modes may interleave).
Circuit cancel_fourier_pairs(const Circuit &c);
/// Checks arity, mode range and interferometer unitarity; throws std::invalid_argument.
void validate(const Circuit &c);

// Linear algebra on r = (x_1..x_M, p_1..p_M).

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> symplectic_form(int m) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Mat w = Mat::Zero(2 * m, 2 * m);
    w.topRightCorner(m, m).setIdentity();
    w.bottomLeftCorner(m, m) = -Mat::Identity(m, m);
    return w;
}

/// max |S Omega S^T - Omega|
template <typename Derived>
typename Derived::RealScalar symplectic_defect(const Eigen::MatrixBase<Derived> &s) {
    using Scalar = typename Derived::Scalar;
    const int m = static_cast<int>(s.rows()) / 2;
    auto w = symplectic_form<Scalar>(m);
    return (s * w * s.transpose() - w).cwiseAbs().maxCoeff();
}

/// O_U = [[Re U, -Im U], [Im U, Re U]]
template <typename Derived>
Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, Eigen::Dynamic>
orthogonal_embedding(const Eigen::MatrixBase<Derived> &u) {
    const Eigen::Index m = u.rows();
    Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, Eigen::Dynamic> o(2 * m, 2 * m);
    o << u.real(), -u.imag(), u.imag(), u.real();
    return o;
}

/// Affine Heisenberg action r -> S r + d of one gate, as a (2M+1)-square
/// augmented matrix. Gaussian kinds only.
Eigen::MatrixXd gate_affine(const Gate &g, int num_modes, double hbar);
/// Product A_n ... A_1 over the circuit; throws for non-Gaussian gates.
Eigen::MatrixXd circuit_affine(const Circuit &c);

}  // namespace cvgate
