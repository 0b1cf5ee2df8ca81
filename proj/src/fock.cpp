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

#include "cvgate/fock.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "cvgate/errors.hpp"

namespace cvgate {

using cd = std::complex<double>;

long FockBasis::dim() const {
    long d = 1;
    for (int j = 0; j < modes; ++j) d *= cutoff;
    return d;
}

long FockBasis::index(const std::vector<int> &n) const {
    long idx = 0;
    for (int j = 0; j < modes; ++j) idx = idx * cutoff + n.at(j);
    return idx;
}

std::vector<int> FockBasis::occupations(long index) const {
    std::vector<int> n(modes);
    for (int j = modes - 1; j >= 0; --j) {
        n[j] = static_cast<int>(index % cutoff);
        index /= cutoff;
    }
    return n;
}

FockBasis fock_basis(int cutoff, int modes) {
    if (cutoff < 2) throw std::invalid_argument("cutoff must be at least 2");
    if (modes < 1) throw std::invalid_argument("need at least one mode");
    long d = 1;
    for (int j = 0; j < modes; ++j) {
        d *= cutoff;
        if (d > kMaxFockDim)
            throw DimensionOverflow("Fock dimension " + std::to_string(cutoff) + "^" + std::to_string(modes) +
                                    " exceeds " + std::to_string(kMaxFockDim));
    }
    return {cutoff, modes};
}

namespace {

Eigen::MatrixXcd annihilation(int n) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

/// Exact N x N block of x^dx p^dp.
Eigen::MatrixXcd quad_block(int dx, int dp, int n, double hbar) {
    const int np = n + dx + dp;
    const Eigen::MatrixXcd a = annihilation(np), ad = a.adjoint();
    const double s = std::sqrt(hbar / 2.0);
    const Eigen::MatrixXcd x = s * (a + ad), p = cd(0, -s) * (a - ad);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(np, np);
    for (int k = 0; k < dx; ++k) m = m * x;
    for (int k = 0; k < dp; ++k) m = m * p;
    return m.topLeftCorner(n, n);
}

SparseOp to_sparse(const Eigen::MatrixXcd &m) {
    SparseOp s = m.sparseView(1.0, 1e-300);
    s.makeCompressed();
    return s;
}

SparseOp sparse_identity(long n) {
    SparseOp s(n, n);
    s.setIdentity();
    return s;
}

SparseOp monomial_sparse(const QuadMonomial &mono, const FockBasis &b, double hbar) {
    SparseOp acc = sparse_identity(1);
    for (int j = 0; j < b.modes; ++j) {
        const ModePower *f = mono.find(j);
        SparseOp factor = f ? to_sparse(quad_block(f->dx, f->dp, b.cutoff, hbar)) : sparse_identity(b.cutoff);
        acc = Eigen::kroneckerProduct(acc, factor).eval();
    }
    return acc;
}

/// exp(i K) for Hermitian dense K.
Eigen::MatrixXcd hermitian_exp(const Eigen::MatrixXcd &k) {
    const Eigen::MatrixXcd h = (k + k.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXcd ph = (cd(0, 1) * es.eigenvalues().cast<cd>()).array().exp();
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

/// exp(i f(X)) with X the truncated position matrix; x-diagonal gates built
/// this way commute exactly with each other and with X.
template <typename F>
Eigen::MatrixXcd position_function(int n, double hbar, F f) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(quad_block(1, 0, n, hbar));
    Eigen::VectorXcd ph(n);
    for (int k = 0; k < n; ++k) ph(k) = std::exp(cd(0, f(es.eigenvalues()(k))));
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

}  // namespace

SparseOp build_sparse(const QuadPoly &p, const FockBasis &b, double hbar) {
    const long d = b.dim();
    SparseOp h(d, d);
    for (int m : p.modes())
        if (m >= b.modes) throw std::invalid_argument("polynomial acts outside the register");
    for (const auto &[mono, c] : p.terms()) {
        const cd cv = c.eval(hbar);
        SparseOp m = monomial_sparse(mono, b, hbar);
        if (mono.order == QuadMonomial::Order::Symmetrized) m = (m + SparseOp(m.adjoint())).eval();
        h += cv * m;
    }
    h.prune(cd(0.0), 0.0);
    return h;
}

FockOperator build_operator(const QuadPoly &p, int cutoff, int modes, double hbar) {
    FockBasis b = fock_basis(cutoff, modes);
    return {b, hbar, Eigen::MatrixXcd(build_sparse(p, b, hbar))};
}

FockOperator unitary_of(const QuadPoly &generator, double t, int cutoff, int modes, double hbar) {
    if (!generator.is_hermitian()) throw std::invalid_argument("generator is not Hermitian: " + generator.str());
    FockOperator op = build_operator(generator, cutoff, modes, hbar);
    op.matrix = hermitian_exp(t * op.matrix);
    return op;
}

namespace {

/// exp(i t H) v for one column: Lanczos steps of length tau, halved until
/// the residual estimate beta_m |(e^{i tau T})_{m,0}| is small.
using RowOp = Eigen::SparseMatrix<cd, Eigen::RowMajor>;

Eigen::VectorXcd krylov_exp(const RowOp &h, double t, Eigen::VectorXcd v) {
    constexpr int kMaxDim = 80;
    if (v.norm() == 0) return v;
    const long n = h.rows();
    const int mmax = static_cast<int>(std::min<long>(kMaxDim, n));
    double left = t, tau = t;
    Eigen::MatrixXcd q(n, mmax);
    while (left != 0) {
        if (std::abs(tau) > std::abs(left)) tau = left;
        const double norm = v.norm();
        q.col(0) = v / norm;
        std::vector<double> alpha, beta;
        Eigen::VectorXcd y;
        int m = 0;
        bool done = false;
        for (int k = 0; k < mmax && !done; ++k) {
            Eigen::VectorXcd w = h * q.col(k);
            alpha.push_back(std::real(q.col(k).dot(w)));
            w -= alpha.back() * q.col(k);
            if (k > 0) w -= beta.back() * q.col(k - 1);
            const double b = w.norm();
            m = k + 1;
            const bool exhausted = b < 1e-12 * norm || m == mmax;
            if (!exhausted) {
                beta.push_back(b);
                q.col(k + 1) = w / b;
            }
            if (m % 4 != 0 && !exhausted) continue;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
            es.computeFromTridiagonal(Eigen::Map<const Eigen::VectorXd>(alpha.data(), m),
                                      Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1));
            // halve tau until this basis suffices
            for (;;) {
                const Eigen::VectorXcd ph =
                    (cd(0, tau) * es.eigenvalues().cast<cd>()).array().exp().matrix().cwiseProduct(
                        es.eigenvectors().row(0).transpose().cast<cd>());
                y = es.eigenvectors().cast<cd>() * ph;
                const double err = b < 1e-12 * norm ? 0.0 : b * std::abs(y(m - 1));
                if (err < 1e-14) {
                    done = true;
                    break;
                }
                if (!exhausted) break;
                tau /= 2;
            }
        }
        v = norm * (q.leftCols(m) * y);
        left -= tau;
        tau *= 1.5;
    }
    return v;
}

}  // namespace

Eigen::MatrixXcd apply_exp(const SparseOp &h, double t, const Eigen::MatrixXcd &v) {
    if (h.nonZeros() == 0 || t == 0 || v.cols() == 0) return v;
    // row-major products are several times faster for single vectors
    const RowOp hr = h;
    Eigen::MatrixXcd out(v.rows(), v.cols());
    for (Eigen::Index k = 0; k < v.cols(); ++k) out.col(k) = krylov_exp(hr, t, v.col(k));
    return out;
}

/// exp(i th (a^dag b + a b^dag)) block by block in total photon number.
static Eigen::MatrixXcd beamsplitter(double th, int n) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n * n, n * n);
    for (int total = 0; total <= 2 * n - 2; ++total) {
        std::vector<int> idx;  // p = photons in the first mode
        for (int p = std::max(0, total - n + 1); p <= std::min(total, n - 1); ++p) idx.push_back(p);
        const int d = static_cast<int>(idx.size());
        Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(d, d);
        for (int r = 0; r + 1 < d; ++r) {
            // a^dag b: (p, q) -> (p + 1, q - 1)
            const int p = idx[r], q = total - p;
            const double amp = std::sqrt(static_cast<double>(p + 1) * q);
            k(r + 1, r) = th * amp;
            k(r, r + 1) = th * amp;
        }
        const Eigen::MatrixXcd e = hermitian_exp(k);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) u(idx[r] * n + (total - idx[r]), idx[c] * n + (total - idx[c])) = e(r, c);
    }
    return u;
}

Eigen::MatrixXcd gate_unitary(const Gate &g, int cutoff, double hbar) {
    const int n = cutoff;
    const cd i(0, 1);
    auto diag_rotation = [&](double th) {
        Eigen::VectorXcd d(n);
        for (int k = 0; k < n; ++k) d(k) = std::exp(i * (th * k));
        return Eigen::MatrixXcd(d.asDiagonal());
    };
    const Eigen::MatrixXcd a = annihilation(n), ad = a.adjoint(), id = Eigen::MatrixXcd::Identity(n, n);
    switch (g.kind) {
        case GateKind::R: return diag_rotation(g.params.at(0));
        case GateKind::F: return diag_rotation(g.params.at(0) > 0 ? M_PI / 2 : -M_PI / 2);
        case GateKind::Z: return position_function(n, hbar, [&](double x) { return g.params.at(0) / hbar * x; });
        case GateKind::P:
            return position_function(n, hbar, [&](double x) { return g.params.at(0) / (2 * hbar) * x * x; });
        case GateKind::V:
            return position_function(n, hbar, [&](double x) { return g.params.at(0) / (3 * hbar) * x * x * x; });
        case GateKind::CZ: {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(quad_block(1, 0, n, hbar));
            const Eigen::VectorXd &lam = es.eigenvalues();
            Eigen::VectorXcd ph(n * n);
            for (int r = 0; r < n; ++r)
                for (int q = 0; q < n; ++q) ph(r * n + q) = std::exp(i * (g.params.at(0) / hbar * lam(r) * lam(q)));
            const Eigen::MatrixXcd w = kron(es.eigenvectors(), es.eigenvectors());
            return w * ph.asDiagonal() * w.adjoint();
        }
        case GateKind::D: {
            const cd alpha(g.params.at(0), g.params.at(1));
            return hermitian_exp(-i * (alpha * ad - std::conj(alpha) * a));
        }
        case GateKind::T: return hermitian_exp(-i * (g.params.at(0) / 2) * (ad * ad - a * a));
        case GateKind::BS: return beamsplitter(g.params.at(0), n);
        case GateKind::U: {
            const int m = static_cast<int>(g.unitary.rows());
            Eigen::MatrixXcd k = -i * Eigen::MatrixXcd(g.unitary.log());
            k = (k + k.adjoint()) / 2.0;
            auto embed = [&](const Eigen::MatrixXcd &op, int at) {
                Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
                for (int j = 0; j < m; ++j) acc = kron(acc, j == at ? op : id);
                return acc;
            };
            long dim = 1;
            for (int j = 0; j < m; ++j) dim *= n;
            Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(dim, dim);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c)
                    if (std::abs(k(r, c)) > 0) gen += k(r, c) * embed(ad, r) * embed(a, c);
            return hermitian_exp(gen);
        }
    }
    throw std::invalid_argument("unsupported gate kind");
}

Eigen::MatrixXcd apply_circuit(const Circuit &c, const FockBasis &b, const Eigen::MatrixXcd &v) {
    if (c.num_modes != b.modes) throw std::invalid_argument("circuit and basis mode counts differ");
    if (v.rows() != b.dim()) throw std::invalid_argument("state block has the wrong dimension");
    validate(c);
    const long dim = b.dim();
    const long cols = v.cols();
    std::vector<long> stride(b.modes);
    for (int j = b.modes - 1, s = 1; j >= 0; --j, s *= b.cutoff) stride[j] = s;

    std::map<std::pair<int, std::vector<double>>, Eigen::MatrixXcd> cache;
    Eigen::MatrixXcd out = v;
    for (const auto &g : c.gates) {
        Eigen::MatrixXcd u;
        if (g.kind == GateKind::U) {
            u = gate_unitary(g, b.cutoff, c.hbar);
        } else {
            auto key = std::make_pair(static_cast<int>(g.kind), g.params);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, gate_unitary(g, b.cutoff, c.hbar)).first;
            u = it->second;
        }
        const int k = static_cast<int>(g.modes.size());
        const long local = u.rows();
        std::vector<long> off(local, 0);
        for (long l = 0; l < local; ++l) {
            long rem = l;
            for (int q = k - 1; q >= 0; --q) {
                off[l] += (rem % b.cutoff) * stride[g.modes[q]];
                rem /= b.cutoff;
            }
        }
        std::vector<long> rest;
        for (long idx = 0; idx < dim; ++idx) {
            bool zero = true;
            for (int q = 0; q < k && zero; ++q) zero = (idx / stride[g.modes[q]]) % b.cutoff == 0;
            if (zero) rest.push_back(idx);
        }
        const long nr = static_cast<long>(rest.size());
        Eigen::MatrixXcd gather(local, nr * cols);
        for (long r = 0; r < nr; ++r)
            for (long l = 0; l < local; ++l) gather.row(l).segment(r * cols, cols) = out.row(rest[r] + off[l]);
        const Eigen::MatrixXcd moved = u * gather;
        for (long r = 0; r < nr; ++r)
            for (long l = 0; l < local; ++l) out.row(rest[r] + off[l]) = moved.row(l).segment(r * cols, cols);
    }
    return out;
}

FockOperator circuit_unitary(const Circuit &c, int cutoff) {
    FockBasis b = fock_basis(cutoff, c.num_modes);
    return {b, c.hbar, apply_circuit(c, b, Eigen::MatrixXcd::Identity(b.dim(), b.dim()))};
}

std::vector<long> photon_subspace(const FockBasis &b, int max_photons) {
    std::vector<long> out;
    for (long idx = 0; idx < b.dim(); ++idx) {
        int total = 0;
        for (int n : b.occupations(idx)) total += n;
        if (total <= max_photons) out.push_back(idx);
    }
    return out;
}

Eigen::MatrixXcd basis_columns(const FockBasis &b, const std::vector<long> &indices) {
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(b.dim(), static_cast<long>(indices.size()));
    for (size_t k = 0; k < indices.size(); ++k) v(indices[k], static_cast<long>(k)) = 1.0;
    return v;
}

ComparisonReport compare(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, const std::vector<long> &rows) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("compare: shape mismatch");
    const long d = static_cast<long>(rows.size());
    if (d == 0 || d > a.rows() || a.cols() != d) throw std::invalid_argument("compare: subspace dimension out of range");
    Eigen::MatrixXcd ab(d, d), bb(d, d);
    for (long r = 0; r < d; ++r) {
        if (rows[r] < 0 || rows[r] >= a.rows()) throw std::invalid_argument("compare: row index out of range");
        ab.row(r) = a.row(rows[r]);
        bb.row(r) = b.row(rows[r]);
    }
    ComparisonReport rep;
    rep.d = d;
    const cd tau = (ab.adjoint() * bb).trace();
    const cd phase = std::abs(tau) > 0 ? tau / std::abs(tau) : cd(1);
    const Eigen::MatrixXcd diff = ab - std::conj(phase) * bb;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff.adjoint() * diff, Eigen::EigenvaluesOnly);
    rep.distance = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    const double na = ab.squaredNorm(), nb = bb.squaredNorm();
    rep.fidelity = na > 0 && nb > 0 ? std::min(1.0, std::norm(tau) / (na * nb)) : 0.0;
    for (long col = 0; col < d; ++col)
        rep.leakage = std::max(rep.leakage, std::sqrt(std::max(0.0, a.col(col).squaredNorm() - ab.col(col).squaredNorm())));
    return rep;
}

ComparisonReport compare(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, long d) {
    std::vector<long> rows(static_cast<size_t>(std::max<long>(d, 0)));
    for (long k = 0; k < d; ++k) rows[k] = k;
    return compare(a.leftCols(std::min<long>(d, a.cols())), b.leftCols(std::min<long>(d, b.cols())), rows);
}

ComparisonReport compare_to_generator(const QuadPoly &generator, double t, const Circuit &c, int cutoff,
                                      int max_photons) {
    if (!generator.is_hermitian()) throw std::invalid_argument("generator is not Hermitian: " + generator.str());
    const FockBasis b = fock_basis(cutoff, c.num_modes);
    const std::vector<long> sub = photon_subspace(b, max_photons);
    const Eigen::MatrixXcd v = basis_columns(b, sub);
    const Eigen::MatrixXcd target = apply_exp(build_sparse(generator, b, c.hbar), t, v);
    ComparisonReport r = compare(target, apply_circuit(c, b, v), sub);
    r.edge = truncation_edge(b, target);
    return r;
}

double truncation_edge(const FockBasis &b, const Eigen::MatrixXcd &images, int levels) {
    if (images.rows() != b.dim()) throw std::invalid_argument("truncation_edge: row count differs from the basis");
    Eigen::VectorXd sq = Eigen::VectorXd::Zero(images.cols());
    for (long i = 0; i < b.dim(); ++i) {
        const std::vector<int> n = b.occupations(i);
        if (*std::max_element(n.begin(), n.end()) >= b.cutoff - levels) sq += images.row(i).cwiseAbs2().transpose();
    }
    return images.cols() ? std::sqrt(sq.maxCoeff()) : 0.0;
}

}  // namespace cvgate
