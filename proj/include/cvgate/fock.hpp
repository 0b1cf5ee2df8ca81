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
#include <Eigen/Sparse>
#include <complex>
#include <vector>

#include "cvgate/circuit.hpp"
#include "cvgate/quad_poly.hpp"

namespace cvgate {

/// Largest N^M the oracle accepts.
constexpr long kMaxFockDim = 4096;

using SparseOp = Eigen::SparseMatrix<std::complex<double>>;

/// Basis |n_0 ... n_{M-1}>, mode 0 most significant.
struct FockBasis {
    int cutoff = 2;
    int modes = 1;

    long dim() const;
    long index(const std::vector<int> &n) const;
    std::vector<int> occupations(long index) const;
};

/// Throws DimensionOverflow past kMaxFockDim.
FockBasis fock_basis(int cutoff, int modes);

struct FockOperator {
    FockBasis basis;
    double hbar = 2.0;
    Eigen::MatrixXcd matrix;
};

/// Truncated matrix of the polynomial in the given operator order. Each
/// factor is truncated from a padded space, so products are exact blocks of
/// the infinite matrices.
SparseOp build_sparse(const QuadPoly &p, const FockBasis &b, double hbar);
FockOperator build_operator(const QuadPoly &p, int cutoff, int modes, double hbar);

/// exp(i t G); G must be Hermitian.
FockOperator unitary_of(const QuadPoly &generator, double t, int cutoff, int modes, double hbar);
/// exp(i t H) v column by column (Lanczos, adaptive steps); H Hermitian.
Eigen::MatrixXcd apply_exp(const SparseOp &h, double t, const Eigen::MatrixXcd &v);

/// Local unitary of a gate on its own modes, listed order, dimension N^arity.
Eigen::MatrixXcd gate_unitary(const Gate &g, int cutoff, double hbar);
/// Applies the circuit to the columns of v (first gate first).
Eigen::MatrixXcd apply_circuit(const Circuit &c, const FockBasis &b, const Eigen::MatrixXcd &v);
FockOperator circuit_unitary(const Circuit &c, int cutoff);

/// Indices of basis states with at most `max_photons` photons in total.
std::vector<long> photon_subspace(const FockBasis &b, int max_photons);
Eigen::MatrixXcd basis_columns(const FockBasis &b, const std::vector<long> &indices);

/// Comparison on a d-state subspace: inputs and outputs both restricted to it.
struct ComparisonReport {
    long d = 0;
    /// Operator norm of (A - e^{i phi} B) on the d x d blocks, phi aligning the global phase.
    double distance = 0.0;
    /// |tr(A^dag B)|^2 / (|A|_F^2 |B|_F^2).
    double fidelity = 1.0;
    /// Largest norm a target column carries outside the subspace.
    double leakage = 0.0;
    /// Largest norm a target column puts on the top two levels of any mode;
    /// -1 when not computed.
    double edge = -1.0;
};

/// a, b: images of the d subspace states (columns, in `rows` order) under
/// target and circuit; `rows` lists the subspace states.
ComparisonReport compare(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, const std::vector<long> &rows);
/// Top-left d x d blocks of two full matrices.
ComparisonReport compare(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, long d);
/// Largest column norm of `images` on states with some mode at level >= cutoff - levels.
double truncation_edge(const FockBasis &b, const Eigen::MatrixXcd &images, int levels = 2);
/// Target exp(i t G) against the circuit on states with <= max_photons photons.
ComparisonReport compare_to_generator(const QuadPoly &generator, double t, const Circuit &c, int cutoff,
                                      int max_photons);

}  // namespace cvgate
