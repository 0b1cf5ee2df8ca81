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

#include <gtest/gtest.h>

#include <cmath>

#include "cvgate/errors.hpp"
#include "cvgate/fock.hpp"
#include "cvgate/gaussian.hpp"

using namespace cvgate;

namespace {

using cd = std::complex<double>;

double unitarity_defect(const Eigen::MatrixXcd &u) {
    return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

Circuit one(const Gate &g, int modes = 1) {
    Circuit c;
    c.num_modes = modes;
    c.append(g);
    return c;
}

}  // namespace

TEST(FockOracle, LadderRealizations) {
    Eigen::MatrixXcd x = build_operator(QuadPoly::x(0), 3, 1, 2.0).matrix;
    Eigen::Matrix3cd want;
    want << 0, 1, 0, 1, 0, std::sqrt(2.0), 0, std::sqrt(2.0), 0;
    EXPECT_LT((x - want).cwiseAbs().maxCoeff(), 1e-15);

    const int n = 8;
    Eigen::MatrixXcd xm = build_operator(QuadPoly::x(0), n, 1, 2.0).matrix;
    Eigen::MatrixXcd pm = build_operator(QuadPoly::p(0), n, 1, 2.0).matrix;
    Eigen::MatrixXcd comm = xm * pm - pm * xm;
    EXPECT_LT((comm.topLeftCorner(n - 1, n - 1) - cd(0, 2.0) * Eigen::MatrixXcd::Identity(n - 1, n - 1))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
    EXPECT_GT(std::abs(comm(n - 1, n - 1) - cd(0, 2.0)), 1.0);

    EXPECT_TRUE(build_operator(QuadPoly(), 4, 2, 2.0).matrix.isZero(0));

    // Hermitian polynomials give Hermitian matrices
    QuadPoly h = QuadPoly::sym(QuadMonomial::from_powers({{0, 2, 1}})) + QuadPoly::x(0) * QuadPoly::p(1, 2);
    Eigen::MatrixXcd hm = build_operator(h, 5, 2, 2.0).matrix;
    EXPECT_LT((hm - hm.adjoint()).cwiseAbs().maxCoeff(), 1e-12);

    // products of blocks are exact blocks of the infinite matrices
    Eigen::MatrixXcd x2 = build_operator(QuadPoly::x(0, 2), n, 1, 2.0).matrix;
    Eigen::MatrixXcd big = build_operator(QuadPoly::x(0), n + 2, 1, 2.0).matrix;
    EXPECT_LT((x2 - (big * big).topLeftCorner(n, n)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FockOracle, Exponentials) {
    EXPECT_TRUE(unitary_of(QuadPoly::x(0, 3), 0.0, 6, 1, 2.0).matrix.isIdentity(1e-14));
    FockOperator u = unitary_of(QuadPoly::x(0, 3) + QuadPoly::p(0, 2), 0.3, 10, 1, 2.0);
    EXPECT_LT(unitarity_defect(u.matrix), 1e-8);
    EXPECT_THROW(unitary_of(QuadPoly::x(0) * QuadPoly::p(0), 1.0, 4, 1, 2.0), std::invalid_argument);

    // R(2 pi) is the identity up to phase
    ComparisonReport r = compare(circuit_unitary(one(make_gate(GateKind::R, {0}, {2 * M_PI})), 9).matrix,
                                 Eigen::MatrixXcd::Identity(9, 9), 9L);
    EXPECT_LT(r.distance, 1e-12);

    // V is diagonal in the position basis
    Eigen::MatrixXcd v = gate_unitary(make_gate(GateKind::V, {0}, {0.4}), 12, 2.0);
    Eigen::MatrixXcd x = build_operator(QuadPoly::x(0), 12, 1, 2.0).matrix;
    EXPECT_LT((v * x - x * v).cwiseAbs().maxCoeff(), 1e-8);

    // sparse action agrees with the dense exponential
    FockBasis b = fock_basis(6, 2);
    QuadPoly g = QuadPoly::x(0) * QuadPoly::x(1, 2) + QuadPoly::p(1, 2);
    Eigen::MatrixXcd dense = unitary_of(g, 0.2, 6, 2, 2.0).matrix;
    Eigen::MatrixXcd act = apply_exp(build_sparse(g, b, 2.0), 0.2, Eigen::MatrixXcd::Identity(36, 36));
    EXPECT_LT((dense - act).cwiseAbs().maxCoeff(), 1e-11);
}

TEST(FockOracle, CircuitsAndInverse) {
    Circuit empty;
    empty.num_modes = 2;
    EXPECT_TRUE(circuit_unitary(empty, 4).matrix.isIdentity(0));

    Circuit f4;
    f4.num_modes = 1;
    for (int k = 0; k < 4; ++k) f4.append(make_fourier(0));
    ComparisonReport r = compare(circuit_unitary(f4, 10).matrix, Eigen::MatrixXcd::Identity(10, 10), 10L);
    EXPECT_LT(r.distance, 1e-12);

    Circuit c;
    c.num_modes = 2;
    c.append(make_gate(GateKind::BS, {0, 1}, {0.4}));
    c.append(make_gate(GateKind::T, {0}, {0.2}));
    c.append(make_gate(GateKind::V, {1}, {0.1}));
    c.append(make_gate(GateKind::CZ, {1, 0}, {-0.3}));
    c.append(make_gate(GateKind::D, {1}, {0.2, -0.1}));
    const int n = 10;
    Eigen::MatrixXcd u = circuit_unitary(c, n).matrix, ui = circuit_unitary(inverse(c), n).matrix;
    EXPECT_LT(unitarity_defect(u), 1e-10);
    EXPECT_LT((u * ui - Eigen::MatrixXcd::Identity(n * n, n * n)).cwiseAbs().maxCoeff(), 1e-10);

    // CZ mode order does not matter
    Eigen::MatrixXcd a = gate_unitary(make_gate(GateKind::CZ, {0, 1}, {0.3}), 5, 2.0);
    EXPECT_LT((a - a.transpose()).cwiseAbs().maxCoeff(), 1e-12);

    Circuit wide;
    wide.num_modes = 3;
    EXPECT_THROW(circuit_unitary(wide, 17), DimensionOverflow);
    EXPECT_NO_THROW(fock_basis(16, 3));
}

TEST(FockOracle, CompareAlignsPhase) {
    Eigen::MatrixXcd u = unitary_of(QuadPoly::x(0, 2) + QuadPoly::p(0, 2) * Coeff(Rational(1, 3)), 0.7, 6, 1, 2.0).matrix;
    ComparisonReport same = compare(u, u, 6L);
    EXPECT_NEAR(same.distance, 0, 1e-14);
    EXPECT_NEAR(same.fidelity, 1, 1e-14);
    ComparisonReport ph = compare(u, std::polar(1.0, 0.9) * u, 4L);
    EXPECT_NEAR(ph.distance, 0, 1e-14);
    EXPECT_NEAR(ph.fidelity, 1, 1e-14);
    EXPECT_GE(ph.leakage, 0);
    EXPECT_THROW(compare(u.leftCols(2), u.leftCols(3), std::vector<long>{0, 1}), std::invalid_argument);
    EXPECT_THROW(compare(u, u, 7L), std::invalid_argument);
}

TEST(FockOracle, TruncationEdge) {
    FockBasis b = fock_basis(6, 2);
    EXPECT_EQ(truncation_edge(b, basis_columns(b, {0})), 0.0);
    // |0, 4>: mode 1 sits on the second-highest level
    EXPECT_NEAR(truncation_edge(b, basis_columns(b, {b.index({0, 4})})), 1.0, 1e-15);
    EXPECT_EQ(truncation_edge(b, basis_columns(b, {b.index({3, 3})})), 0.0);
    Eigen::MatrixXcd mix = (basis_columns(b, {0}) + basis_columns(b, {b.index({5, 0})})) / std::sqrt(2.0);
    EXPECT_NEAR(truncation_edge(b, mix, 1), std::sqrt(0.5), 1e-15);
}

TEST(FockOracle, PhaseGateMatchesItsGaussianCompilation) {
    QuadraticHamiltonian h{Eigen::MatrixXd::Zero(2, 2), Eigen::VectorXd::Zero(2)};
    h.H(0, 0) = 1.0;
    Circuit compiled = compile_gaussian(h);
    const int n = 24;
    FockBasis b = fock_basis(n, 1);
    Eigen::MatrixXcd v = basis_columns(b, photon_subspace(b, 7));
    const std::vector<long> sub = photon_subspace(b, 7);
    ComparisonReport r = compare(apply_circuit(one(make_gate(GateKind::P, {0}, {1.0})), b, v),
                                 apply_circuit(compiled, b, v), sub);
    EXPECT_LT(1 - r.fidelity, 1e-6);
    // against the generator: the squeezer's truncation error shrinks fast with the cutoff
    ComparisonReport g = compare_to_generator(QuadPoly::x(0, 2), 1.0 / (2 * 2.0), compiled, n, 7);
    EXPECT_LT(1 - g.fidelity, 1e-6);
    double last = 1.0;
    for (int cut : {20, 24, 28, 32}) {
        const double d = compare_to_generator(QuadPoly::x(0, 2), 0.25, compiled, cut, 7).distance;
        EXPECT_LT(d, last / 10) << cut;
        last = d;
    }
    EXPECT_LT(last, 1e-9);
}

TEST(FockOracle, CoherentQuadraturesFollowSymplecticMap) {
    QuadraticHamiltonian h{Eigen::MatrixXd(4, 4), Eigen::VectorXd::Zero(4)};
    h.H << 0.3, 0.1, 0.0, 0.2, 0.1, -0.2, 0.1, 0.0, 0.0, 0.1, 0.25, -0.1, 0.2, 0.0, -0.1, 0.15;
    const Eigen::MatrixXd s = symplectic_from_quadratic(h);
    const int n = 40;
    FockBasis b = fock_basis(n, 2);
    // coherent state with <r> = r0
    Eigen::VectorXd r0(4);
    r0 << 0.5, -0.3, 0.2, 0.4;
    Circuit disp;
    disp.num_modes = 2;
    disp.append(make_gate(GateKind::D, {0}, {r0(0) / 2, r0(2) / 2}));
    disp.append(make_gate(GateKind::D, {1}, {r0(1) / 2, r0(3) / 2}));
    Eigen::MatrixXcd vac = basis_columns(b, {0});
    Eigen::MatrixXcd psi = apply_circuit(disp, b, vac);
    QuadPoly gen;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            auto q = [](int k) { return k < 2 ? QuadPoly::x(k) : QuadPoly::p(k - 2); };
            gen += q(r) * q(c) * Coeff(rational_approx(h.H(r, c) / 2.0 / 2.0, 1000));
        }
    Eigen::MatrixXcd out = apply_exp(build_sparse(gen, b, 2.0), 1.0, psi);
    Eigen::VectorXd mean(4);
    for (int k = 0; k < 4; ++k) {
        QuadPoly q = k < 2 ? QuadPoly::x(k) : QuadPoly::p(k - 2);
        mean(k) = (out.adjoint() * build_sparse(q, b, 2.0) * out)(0, 0).real();
    }
    // the rational approximation of H is exact for these entries
    EXPECT_LT((mean - s * r0).cwiseAbs().maxCoeff(), 1e-6);
}
