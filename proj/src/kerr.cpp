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


#include "cvgate/kerr.hpp"

#include <cmath>
#include <stdexcept>

#include "cvgate/fock.hpp"

namespace cvgate {

namespace {

Coeff exact(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("kerr: parameters must be finite");
    return Coeff(Rational(v));
}

}  // namespace

QuadPoly effective_hamiltonian(const DrivenKerrParams &k, const FrameParams &f) {
    if (!(f.lambda > 0)) throw std::invalid_argument("kerr: lambda must be positive");
    const Rational lam(f.lambda);
    const Coeff s = Coeff::sigma_pow(-1);
    const QuadPoly xs = QuadPoly::x(0) * (Coeff(lam) * s);
    const QuadPoly ps = QuadPoly::p(0) * (Coeff(Rational(1 / lam)) * s * Coeff::i_unit());
    const QuadPoly y{exact(f.y)};
    const QuadPoly ad = xs - ps + y, a = xs + ps + y;
    return (ad * ad * a * a) * (exact(k.chi) * Coeff(Rational(-1, 2))) + (ad * a) * exact(k.delta) +
           (a + ad) * exact(k.beta);
}

Cancellation solve_cancellation(double chi, double y) { return {3 * chi * y * y - chi, -2 * chi * y * y * y}; }

CubicResidual cubic_residual(double chi, double lambda, double q, double hbar) {
    if (!(lambda > 0)) throw std::invalid_argument("kerr: lambda must be positive");
    CubicResidual r;
    r.chi = chi;
    r.lambda = lambda;
    r.y = std::pow(lambda, q);
    r.hbar = hbar;
    r.cancellation = solve_cancellation(chi, r.y);
    const QuadPoly h =
        effective_hamiltonian({chi, r.cancellation.delta, r.cancellation.beta}, {lambda, r.y});
    const QuadMonomial x3 = QuadMonomial::x(0, 3), x4 = QuadMonomial::x(0, 4), p2 = QuadMonomial::p(0, 2);
    r.cubic_coeff = h.coefficient(x3).eval_real(hbar);
    if (r.cubic_coeff == 0) throw std::invalid_argument("kerr: cubic coefficient vanishes (chi or y is zero)");
    const double c = std::abs(r.cubic_coeff);
    r.quartic_ratio = std::abs(h.coefficient(x4).eval(hbar)) / c;
    r.p2_ratio = std::abs(h.coefficient(p2).eval(hbar)) / c;
    for (const auto &[m, v] : h.terms()) {
        if (m.factors.empty() || m == x3 || m == x4 || m == p2) continue;
        r.tail_ratio = std::max(r.tail_ratio, std::abs(v.eval(hbar)) / c);
    }
    return r;
}

nlohmann::json to_json(const CubicResidual &r) {
    return {{"chi", r.chi},
            {"lambda", r.lambda},
            {"y", r.y},
            {"hbar", r.hbar},
            {"cubic_coeff", r.cubic_coeff},
            {"ratios", {{"quartic_over_cubic", r.quartic_ratio}, {"p2_over_cubic", r.p2_ratio}, {"tail_over_cubic", r.tail_ratio}}},
            {"cancellation", {{"delta", r.cancellation.delta}, {"beta", r.cancellation.beta}}}};
}

double frame_fock_deviation(const DrivenKerrParams &k, const FrameParams &f, int cutoff, int levels, double hbar) {
    if (levels > cutoff) throw std::invalid_argument("kerr: levels exceed cutoff");
    // the frame is applied in a padded space so that its cutoff-sized block is exact
    const int n = 6 * cutoff;
    // a^dag^2 a^2 and a^dag a are diagonal, a + a^dag tridiagonal
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        h(j, j) = -k.chi / 2 * j * (j - 1.0) + k.delta * j;
        if (j + 1 < n) h(j, j + 1) = h(j + 1, j) = k.beta * std::sqrt(j + 1.0);
    }
    Circuit frame;
    frame.num_modes = 1;
    frame.hbar = hbar;
    frame.append(make_gate(GateKind::T, {0}, {std::log(f.lambda)}));
    frame.append(make_gate(GateKind::D, {0}, {f.y, 0.0}));
    const Eigen::MatrixXcd u = circuit_unitary(frame, n).matrix;
    const Eigen::MatrixXcd lhs = u.adjoint() * h * u;
    const Eigen::MatrixXcd rhs = build_operator(effective_hamiltonian(k, f), cutoff, 1, hbar).matrix;
    return (lhs.topLeftCorner(levels, levels) - rhs.topLeftCorner(levels, levels)).cwiseAbs().maxCoeff();
}

}  // namespace cvgate
