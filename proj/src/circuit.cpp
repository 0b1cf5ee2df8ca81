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

#include "cvgate/circuit.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "cvgate/circuit_io.hpp"

namespace cvgate {

namespace {

constexpr std::array<const char *, 10> kNames = {"R", "Z", "P", "V", "CZ", "D", "T", "BS", "U", "F"};

}  // namespace

std::string kind_name(GateKind k) { return kNames[static_cast<size_t>(k)]; }

GateKind kind_from_name(const std::string &s) {
    for (size_t i = 0; i < kNames.size(); ++i)
        if (s == kNames[i]) return static_cast<GateKind>(i);
    throw std::invalid_argument("unknown gate kind '" + s + "'");
}

bool is_gaussian(GateKind k) { return k != GateKind::V; }

int Gate::arity() const {
    switch (kind) {
        case GateKind::CZ:
        case GateKind::BS: return 2;
        case GateKind::U: return static_cast<int>(unitary.rows());
        default: return 1;
    }
}

Gate make_gate(GateKind k, std::vector<int> modes, std::vector<double> params) {
    Gate g;
    g.kind = k;
    g.modes = std::move(modes);
    g.params = std::move(params);
    return g;
}

Gate make_exact(GateKind k, std::vector<int> modes, const Coeff &param, double hbar) {
    Gate g = make_gate(k, std::move(modes), {param.eval_real(hbar)});
    g.exact = {param};
    return g;
}

Gate make_fourier(int mode, bool dagger) { return make_gate(GateKind::F, {mode}, {dagger ? -1.0 : 1.0}); }

Gate make_interferometer(std::vector<int> modes, const Eigen::MatrixXcd &u) {
    Gate g;
    g.kind = GateKind::U;
    g.modes = std::move(modes);
    g.unitary = u;
    return g;
}

void Circuit::append(const Gate &g) { gates.push_back(g); }

void Circuit::append(const Circuit &c) { gates.insert(gates.end(), c.gates.begin(), c.gates.end()); }

Gate inverse(const Gate &g) {
    Gate r = g;
    for (auto &v : r.params) v = -v;
    for (auto &c : r.exact) c = -c;
    if (g.kind == GateKind::U) r.unitary = g.unitary.adjoint();
    return r;
}

Circuit inverse(const Circuit &c) {
    Circuit r = c;
    r.gates.clear();
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) r.gates.push_back(inverse(*it));
    return r;
}

GateCountReport count_gates(const Circuit &c) {
    GateCountReport rep;
    for (const auto &g : c.gates) {
        ++rep.counts[kind_name(g.kind)];
        ++rep.total_including_fourier;
        if (g.kind != GateKind::F) ++rep.total_excluding_fourier;
    }
    rep.ancillae = static_cast<int>(c.ancillae.size());
    return rep;
}

Circuit conjugate(const Circuit &outer, const Circuit &inner) {
    Circuit r = inner;
    r.num_modes = std::max(outer.num_modes, inner.num_modes);
    r.gates = outer.gates;
    r.append(inner);
    r.append(inverse(outer));
    return r;
}

Circuit cancel_fourier_pairs(const Circuit &c) {
    std::vector<std::vector<size_t>> live(static_cast<size_t>(std::max(c.num_modes, 0)));
    std::vector<bool> removed(c.gates.size(), false);
    auto stack_of = [&](int m) -> std::vector<size_t> & {
        if (m >= static_cast<int>(live.size())) live.resize(static_cast<size_t>(m) + 1);
        return live[static_cast<size_t>(m)];
    };
    for (size_t i = 0; i < c.gates.size(); ++i) {
        const Gate &g = c.gates[i];
        if (g.kind == GateKind::F) {
            auto &st = stack_of(g.modes[0]);
            if (!st.empty()) {
                const Gate &prev = c.gates[st.back()];
                if (prev.kind == GateKind::F && prev.params[0] == -g.params[0]) {
                    removed[st.back()] = removed[i] = true;
                    st.pop_back();
                    continue;
                }
            }
        }
        for (int m : g.modes) stack_of(m).push_back(i);
    }
    Circuit r = c;
    r.gates.clear();
    for (size_t i = 0; i < c.gates.size(); ++i)
        if (!removed[i]) r.gates.push_back(c.gates[i]);
    return r;
}

void validate(const Circuit &c) {
    for (size_t i = 0; i < c.gates.size(); ++i) {
        const Gate &g = c.gates[i];
        const std::string where = "gate " + std::to_string(i) + " (" + kind_name(g.kind) + ")";
        if (static_cast<int>(g.modes.size()) != g.arity())
            throw std::invalid_argument(where + ": mode count does not match arity");
        for (size_t a = 0; a < g.modes.size(); ++a) {
            if (g.modes[a] < 0 || g.modes[a] >= c.num_modes)
                throw std::invalid_argument(where + ": mode index out of range");
            for (size_t b = 0; b < a; ++b)
                if (g.modes[a] == g.modes[b]) throw std::invalid_argument(where + ": repeated mode");
        }
        size_t want = g.kind == GateKind::U ? 0 : (g.kind == GateKind::D ? 2 : 1);
        if (g.params.size() != want) throw std::invalid_argument(where + ": wrong parameter count");
        if (g.kind == GateKind::F && std::abs(g.params[0]) != 1.0)
            throw std::invalid_argument(where + ": Fourier parameter must be +1 or -1");
        if (g.kind == GateKind::U) {
            const auto n = g.unitary.rows();
            if (g.unitary.cols() != n || n == 0) throw std::invalid_argument(where + ": matrix not square");
            double dev = (g.unitary.adjoint() * g.unitary - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
            if (dev > 1e-10) throw std::invalid_argument(where + ": matrix not unitary");
        }
    }
    for (int a : c.ancillae)
        if (a < 0 || a >= c.num_modes) throw std::invalid_argument("ancilla index out of range");
}

Eigen::MatrixXd gate_affine(const Gate &g, int num_modes, double hbar) {
    const int m = num_modes;
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2 * m + 1, 2 * m + 1);
    auto xi = [&](int mode) { return mode; };
    auto pi = [&](int mode) { return m + mode; };
    const int j = g.modes.empty() ? 0 : g.modes[0];
    switch (g.kind) {
        case GateKind::R:
        case GateKind::F: {
            double c, s;
            if (g.kind == GateKind::F) {
                c = 0.0;
                s = g.params[0];
            } else {
                c = std::cos(g.params[0]);
                s = std::sin(g.params[0]);
            }
            a(xi(j), xi(j)) = c;
            a(xi(j), pi(j)) = -s;
            a(pi(j), xi(j)) = s;
            a(pi(j), pi(j)) = c;
            break;
        }
        case GateKind::Z: a(pi(j), 2 * m) = g.params[0]; break;
        case GateKind::P: a(pi(j), xi(j)) = g.params[0]; break;
        case GateKind::CZ: {
            const int k = g.modes[1];
            a(pi(j), xi(k)) = g.params[0];
            a(pi(k), xi(j)) = g.params[0];
            break;
        }
        case GateKind::D: {
            const double sig = std::sqrt(2.0 * hbar);
            a(xi(j), 2 * m) = sig * g.params[0];
            a(pi(j), 2 * m) = sig * g.params[1];
            break;
        }
        case GateKind::T:
            a(xi(j), xi(j)) = std::exp(g.params[0]);
            a(pi(j), pi(j)) = std::exp(-g.params[0]);
            break;
        case GateKind::BS:
        case GateKind::U: {
            Eigen::MatrixXcd u;
            if (g.kind == GateKind::BS) {
                const double c = std::cos(g.params[0]), s = std::sin(g.params[0]);
                u.resize(2, 2);
                u << c, std::complex<double>(0, s), std::complex<double>(0, s), c;
            } else {
                u = g.unitary;
            }
            Eigen::MatrixXd o = orthogonal_embedding(u);
            const int n = static_cast<int>(g.modes.size());
            for (int r = 0; r < n; ++r)
                for (int q = 0; q < n; ++q) {
                    a(xi(g.modes[r]), xi(g.modes[q])) = o(r, q);
                    a(xi(g.modes[r]), pi(g.modes[q])) = o(r, n + q);
                    a(pi(g.modes[r]), xi(g.modes[q])) = o(n + r, q);
                    a(pi(g.modes[r]), pi(g.modes[q])) = o(n + r, n + q);
                }
            break;
        }
        case GateKind::V: throw std::invalid_argument("gate_affine: cubic phase gate is not Gaussian");
    }
    return a;
}

Eigen::MatrixXd circuit_affine(const Circuit &c) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2 * c.num_modes + 1, 2 * c.num_modes + 1);
    for (const auto &g : c.gates) a = gate_affine(g, c.num_modes, c.hbar) * a;
    return a;
}

// JSON

nlohmann::json to_json(const Circuit &c) {
    nlohmann::json j;
    j["num_modes"] = c.num_modes;
    j["gates"] = nlohmann::json::array();
    for (const auto &g : c.gates) {
        nlohmann::json jg;
        jg["kind"] = kind_name(g.kind);
        jg["modes"] = g.modes;
        if (g.kind == GateKind::U) {
            std::vector<std::vector<double>> re(g.unitary.rows()), im(g.unitary.rows());
            for (Eigen::Index r = 0; r < g.unitary.rows(); ++r)
                for (Eigen::Index q = 0; q < g.unitary.cols(); ++q) {
                    re[r].push_back(g.unitary(r, q).real());
                    im[r].push_back(g.unitary(r, q).imag());
                }
            jg["params"] = {{"re", re}, {"im", im}};
        } else {
            jg["params"] = g.params;
        }
        j["gates"].push_back(std::move(jg));
    }
    j["ancillae"] = c.ancillae;
    j["convention"] = {{"hbar", c.hbar}, {"order", "first-applied-first"}};
    return j;
}

Circuit circuit_from_json(const nlohmann::json &j) {
    Circuit c;
    c.num_modes = j.at("num_modes").get<int>();
    if (j.contains("ancillae")) c.ancillae = j.at("ancillae").get<std::vector<int>>();
    if (j.contains("convention")) {
        const auto &conv = j.at("convention");
        if (conv.contains("hbar")) c.hbar = conv.at("hbar").get<double>();
        if (conv.contains("order") && conv.at("order").get<std::string>() != "first-applied-first")
            throw std::invalid_argument("unsupported gate order convention");
    }
    for (const auto &jg : j.at("gates")) {
        Gate g;
        g.kind = kind_from_name(jg.at("kind").get<std::string>());
        g.modes = jg.at("modes").get<std::vector<int>>();
        const auto &jp = jg.at("params");
        if (g.kind == GateKind::U) {
            auto re = jp.at("re").get<std::vector<std::vector<double>>>();
            auto im = jp.at("im").get<std::vector<std::vector<double>>>();
            const auto n = static_cast<Eigen::Index>(re.size());
            if (static_cast<Eigen::Index>(im.size()) != n) throw std::invalid_argument("interferometer re/im mismatch");
            g.unitary.resize(n, n);
            for (Eigen::Index r = 0; r < n; ++r) {
                if (static_cast<Eigen::Index>(re[r].size()) != n || static_cast<Eigen::Index>(im[r].size()) != n)
                    throw std::invalid_argument("interferometer matrix not square");
                for (Eigen::Index q = 0; q < n; ++q) g.unitary(r, q) = {re[r][q], im[r][q]};
            }
        } else {
            g.params = jp.get<std::vector<double>>();
        }
        c.gates.push_back(std::move(g));
    }
    validate(c);
    return c;
}

}  // namespace cvgate
