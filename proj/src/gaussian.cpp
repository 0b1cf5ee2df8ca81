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

#include "cvgate/gaussian.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "cvgate/errors.hpp"

namespace cvgate {

void check_quadratic(const QuadraticHamiltonian &h) {
    if (h.H.rows() != h.H.cols() || h.H.rows() % 2 != 0 || h.H.rows() == 0)
        throw std::invalid_argument("H must be a non-empty 2M x 2M matrix");
    if (h.rbar.size() != h.H.rows()) throw std::invalid_argument("rbar must have length 2M");
    if (h.H != h.H.transpose()) throw std::invalid_argument("H must be symmetric");
}

QuadraticHamiltonian quadratic_from_json(const nlohmann::json &j) {
    auto rows = j.at("H").get<std::vector<std::vector<double>>>();
    const auto n = static_cast<Eigen::Index>(rows.size());
    QuadraticHamiltonian h;
    h.H.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (static_cast<Eigen::Index>(rows[r].size()) != n) throw std::invalid_argument("H must be square");
        for (Eigen::Index c = 0; c < n; ++c) h.H(r, c) = rows[r][c];
    }
    if (j.contains("rbar")) {
        auto v = j.at("rbar").get<std::vector<double>>();
        h.rbar = Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
    } else {
        h.rbar = Eigen::VectorXd::Zero(n);
    }
    check_quadratic(h);
    return h;
}

QuadraticHamiltonian quadratic_from_poly(const QuadPoly &g, double t, int num_modes, double hbar) {
    const int m = num_modes;
    QuadraticHamiltonian h{Eigen::MatrixXd::Zero(2 * m, 2 * m), Eigen::VectorXd::Zero(2 * m)};
    const QuadPoly gn = g.normal();
    for (const auto &[mono, c] : gn.terms()) {
        const int deg = mono.degree();
        if (deg == 0) continue;
        if (deg > 2) throw std::invalid_argument("generator is not quadratic: " + mono.str());
        const std::complex<double> cv = c.eval(hbar);
        if (std::abs(cv.imag()) > 1e-12 * std::max(1.0, std::abs(cv.real())))
            throw std::invalid_argument("generator coefficient is not real: " + mono.str());
        const double v = hbar * t * cv.real();
        std::vector<int> idx;
        for (const auto &f : mono.factors) {
            if (f.mode >= m) throw std::invalid_argument("mode index outside the register");
            for (int k = 0; k < f.dx; ++k) idx.push_back(f.mode);
            for (int k = 0; k < f.dp; ++k) idx.push_back(m + f.mode);
        }
        if (deg == 1) {
            h.rbar(idx[0]) += v;
        } else if (idx[0] == idx[1]) {
            h.H(idx[0], idx[0]) += 2 * v;
        } else {
            // x p on one mode differs from its symmetric part by a constant only
            h.H(idx[0], idx[1]) += v;
            h.H(idx[1], idx[0]) += v;
        }
    }
    return h;
}

Eigen::MatrixXd symplectic_from_quadratic(const QuadraticHamiltonian &h) {
    check_quadratic(h);
    const Eigen::MatrixXd w = symplectic_form<double>(h.modes());
    return Eigen::MatrixXd(-w * h.H).exp();
}

Eigen::MatrixXd affine_from_quadratic(const QuadraticHamiltonian &h) {
    check_quadratic(h);
    const int n = 2 * h.modes();
    const Eigen::MatrixXd w = symplectic_form<double>(h.modes());
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n + 1, n + 1);
    l.topLeftCorner(n, n) = -w * h.H;
    l.topRightCorner(n, 1) = -w * h.rbar;
    return l.exp();
}

template <typename Scalar>
EulerFactors<Scalar> euler_decompose(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &s) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using std::abs;
    using std::sqrt;
    if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0)
        throw NonSymplecticInput("symplectic matrix must be 2M x 2M");
    const int n = static_cast<int>(s.rows()), m = n / 2;
    const Scalar scale = std::max<Scalar>(Scalar(1), s.cwiseAbs().maxCoeff());
    if (symplectic_defect(s) > Scalar(1e-8) * scale * scale)
        throw NonSymplecticInput("matrix fails S Omega S^T = Omega");

    // S = P O with P = W Sigma W^T, O = W X^T
    Eigen::JacobiSVD<Mat> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Mat &wm = svd.matrixU();
    const Vec sig = svd.singularValues();
    const Mat p = wm * sig.asDiagonal() * wm.transpose();
    const Mat o = wm * svd.matrixV().transpose();
    const Mat om = symplectic_form<Scalar>(m);

    // symplectic eigenbasis of P: vectors for singular values >= 1, made
    // isotropic by Gram-Schmidt against chosen v and Omega v
    const Scalar tol = Scalar(1e-10);
    std::vector<Vec> chosen;
    std::vector<Scalar> z;
    int start = 0;
    while (start < n && static_cast<int>(chosen.size()) < m) {
        int end = start + 1;
        while (end < n && sig(start) - sig(end) <= tol * sig(start)) ++end;
        const bool unit = abs(sig(start) - 1) <= tol || abs(sig(end - 1) - 1) <= tol;
        if (!unit && sig(start) < 1) break;
        const Mat c = wm.middleCols(start, end - start);
        int want = unit ? (end - start) / 2 : end - start;
        for (int i = 0; i < n && want > 0; ++i) {
            Vec v = c * c.row(i).transpose();
            for (const auto &u : chosen) {
                const Vec wu = om * u;
                v -= u * u.dot(v) + wu * wu.dot(v);
            }
            const Scalar nv = v.norm();
            if (nv < Scalar(1e-6)) continue;
            v /= nv;
            chosen.push_back(v);
            z.push_back(v.dot(p * v));
            --want;
        }
        if (want != 0) throw NonSymplecticInput("could not build a symplectic eigenbasis");
        start = end;
    }
    if (static_cast<int>(chosen.size()) != m) throw NonSymplecticInput("singular values do not pair as (z, 1/z)");

    Mat ov(n, n);
    for (int j = 0; j < m; ++j) {
        ov.col(j) = chosen[j];
        ov.col(m + j) = -om * chosen[j];
    }
    const Mat o2 = ov.transpose() * o;

    EulerFactors<Scalar> f;
    f.z = Eigen::Map<Vec>(z.data(), m);
    const std::complex<Scalar> i(0, 1);
    f.U1 = ov.topLeftCorner(m, m).template cast<std::complex<Scalar>>() +
           i * ov.bottomLeftCorner(m, m).template cast<std::complex<Scalar>>();
    f.U2 = o2.topLeftCorner(m, m).template cast<std::complex<Scalar>>() +
           i * o2.bottomLeftCorner(m, m).template cast<std::complex<Scalar>>();
    return f;
}

template EulerFactors<double> euler_decompose(const Eigen::MatrixXd &);
template EulerFactors<long double> euler_decompose(
    const Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> &);

LinearElimination eliminate_linear(const QuadraticHamiltonian &h) {
    check_quadratic(h);
    LinearElimination e;
    e.H = h.H;
    if (h.rbar.isZero(0)) {
        e.r = Eigen::VectorXd::Zero(h.rbar.size());
        return e;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(h.H);
    if (lu.isInvertible() && lu.rcond() > 1e-12) {
        e.r = -lu.solve(h.rbar);
        return e;
    }
    e.affine = true;
    e.r = affine_from_quadratic(h).topRightCorner(h.rbar.size(), 1);
    return e;
}

namespace {

constexpr double kSkip = 1e-14;

double wrap_angle(double a) { return std::remainder(a, 2 * M_PI); }

void emit_displacement(Circuit &c, const Eigen::VectorXd &r, double hbar) {
    const int m = static_cast<int>(r.size()) / 2;
    const double sig = std::sqrt(2.0 * hbar);
    for (int j = 0; j < m; ++j)
        if (std::abs(r(j)) > kSkip || std::abs(r(m + j)) > kSkip)
            c.append(make_gate(GateKind::D, {j}, {r(j) / sig, r(m + j) / sig}));
}

void emit_interferometer(Circuit &c, const Eigen::MatrixXcd &u, bool mesh) {
    const int m = static_cast<int>(u.rows());
    if ((u - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff() < kSkip) return;
    std::vector<int> modes(m);
    for (int j = 0; j < m; ++j) modes[j] = j;
    if (mesh)
        c.append(mesh_interferometer(u, modes, c.num_modes));
    else
        c.append(make_interferometer(modes, u));
}

}  // namespace

Circuit mesh_interferometer(const Eigen::MatrixXcd &u, const std::vector<int> &modes, int num_modes) {
    const int m = static_cast<int>(u.rows());
    if (u.cols() != m || static_cast<int>(modes.size()) != m) throw NonUnitaryInput("interferometer shape mismatch");
    if ((u.adjoint() * u - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff() > 1e-10)
        throw NonUnitaryInput("interferometer matrix is not unitary");
    Circuit out;
    out.num_modes = num_modes;

    // Null the strict lower triangle with blocks T = BS(th) diag(e^{i phi}, 1)
    // acting on rows (a, a-1); then U = T_1^dag ... T_N^dag D.
    struct Block {
        int a, b;
        double th, phi;
    };
    std::vector<Block> blocks;
    Eigen::MatrixXcd w = u;
    const std::complex<double> i(0, 1);
    for (int col = 0; col < m - 1; ++col) {
        for (int a = m - 1; a > col; --a) {
            const int b = a - 1;
            const std::complex<double> ua = w(a, col), ub = w(b, col);
            if (std::abs(ua) < kSkip) continue;
            double th, phi;
            if (std::abs(ub) < kSkip) {
                th = M_PI / 2;
                phi = 0;
            } else {
                // c e^{i phi} ua + i s ub = 0
                const std::complex<double> q = -i * ub / ua;
                const double tn = (q.real() < 0 ? -1.0 : 1.0) / std::abs(q);
                th = std::atan(tn);
                phi = std::arg(tn * q);
            }
            Eigen::Matrix2cd t;
            const double c = std::cos(th), s = std::sin(th);
            t << c * std::exp(i * phi), i * s, i * s * std::exp(i * phi), c;
            Eigen::MatrixXcd rows(2, m);
            rows.row(0) = w.row(a);
            rows.row(1) = w.row(b);
            rows = t * rows;
            w.row(a) = rows.row(0);
            w.row(b) = rows.row(1);
            w(a, col) = 0;
            blocks.push_back({a, b, th, phi});
        }
    }
    for (int j = 0; j < m; ++j) {
        const double ph = wrap_angle(std::arg(w(j, j)));
        if (std::abs(ph) > kSkip) out.append(make_gate(GateKind::R, {modes[j]}, {ph}));
    }
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        if (std::abs(it->th) > kSkip) out.append(make_gate(GateKind::BS, {modes[it->a], modes[it->b]}, {-it->th}));
        const double ph = wrap_angle(-it->phi);
        if (std::abs(ph) > kSkip) out.append(make_gate(GateKind::R, {modes[it->a]}, {ph}));
    }
    return out;
}

Circuit compile_gaussian(const QuadraticHamiltonian &h, double hbar, bool mesh) {
    check_quadratic(h);
    const int m = h.modes();
    Circuit c;
    c.num_modes = m;
    c.hbar = hbar;
    LinearElimination e = eliminate_linear(h);
    // W(-r) S W(r) only when r is no larger than the net shift d; otherwise
    // S then W(d), which keeps intermediate photon numbers low.
    if (!e.affine) {
        const Eigen::VectorXd d = affine_from_quadratic(h).topRightCorner(h.rbar.size(), 1);
        if (e.r.cwiseAbs().maxCoeff() > d.cwiseAbs().maxCoeff()) {
            e.affine = true;
            e.r = d;
        }
    }
    if (!e.affine) emit_displacement(c, -e.r, hbar);
    if (!h.H.isZero(0)) {
        const Eigen::MatrixXd s = symplectic_from_quadratic(h);
        const EulerFactors<double> f = euler_decompose<double>(s);
        emit_interferometer(c, f.U2, mesh);
        for (int j = 0; j < m; ++j) {
            const double r = std::log(f.z(j));
            if (std::abs(r) > kSkip) c.append(make_gate(GateKind::T, {j}, {r}));
        }
        emit_interferometer(c, f.U1, mesh);
    }
    emit_displacement(c, e.r, hbar);
    return c;
}

}  // namespace cvgate
