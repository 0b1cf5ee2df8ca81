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


// cvgate: decompose, verify, count, table1, kerr.
// Exit codes: 0 ok, 1 internal error, 2 ineligible or invalid target,
// 3 verification outside tolerance.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "cvgate/circuit_io.hpp"
#include "cvgate/errors.hpp"
#include "cvgate/fock.hpp"
#include "cvgate/kerr.hpp"
#include "cvgate/parser.hpp"
#include "cvgate/route.hpp"
#include "cvgate/table.hpp"

using namespace cvgate;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kInternal = 1, kIneligible = 2, kTolerance = 3;

struct Flags {
    std::string method = "auto";
    std::string t = "1";
    double epsilon = 1e-3;
    int K = 0;
    int cutoff = 0;
    double hbar = 2.0;
    int subspace = -1;
    double tol = 1e-6;
    std::string out;
    unsigned seed = 0;
};

struct Ineligible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Flags &f, const std::string &text) {
    if (f.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream os(f.out);
    if (!os) throw std::runtime_error("cannot write " + f.out);
    os << text << "\n";
}

// Strict parse; a same-mode mixture is allowed only for the commutator method.
TargetSpec read_target(const std::string &text, Method m) {
    try {
        return parse(text);
    } catch (const ParseError &strict) {
        if (m == Method::Commutator) {
            try {
                return parse(text, {true});
            } catch (const ParseError &) {
            }
        }
        throw Ineligible(std::string("target: ") + strict.what());
    }
}

RouteOptions route_options(const Flags &f) {
    RouteOptions o;
    try {
        o.t = rational_from_string(f.t);
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("--t: not a number: " + f.t);
    }
    o.epsilon = f.epsilon;
    o.K = f.K;
    o.hbar = f.hbar;
    return o;
}

int cmd_decompose(const std::string &text, const Flags &f, bool count_only) {
    const Method m = method_from_name(f.method);
    const TargetSpec spec = read_target(text, m);
    RouteOptions o = route_options(f);
    o.materialize = !count_only;
    const DecompositionReport r = decompose(spec.poly, m, o);
    json j{{"target", format(spec)}, {"t", rational_str(o.t)}, {"report", to_json(r)}};
    if (!count_only) j["circuit"] = to_json(r.circuit);
    emit(f, j.dump(2));
    return kOk;
}

int cmd_verify(const std::string &circuit_path, const std::string &text, const Flags &f) {
    json cj;
    if (circuit_path == "-") {
        std::cin >> cj;
    } else {
        std::ifstream is(circuit_path);
        if (!is) throw std::runtime_error("cannot read " + circuit_path);
        is >> cj;
    }
    // accept decompose output as well as a bare circuit
    const Circuit c = circuit_from_json(cj.contains("circuit") ? cj.at("circuit") : cj);
    validate(c);
    const TargetSpec spec = read_target(text, Method::Commutator);
    if (spec.poly.num_modes() > c.num_modes) throw Ineligible("target uses more modes than the circuit");
    const int cutoff = f.cutoff > 0 ? f.cutoff : 12;
    const int sub = f.subspace >= 0 ? f.subspace : std::max(1, cutoff / 2 - 1);
    const double t = route_options(f).t.get_d();
    ComparisonReport r, wider;
    bool checked = true;
    try {
        r = compare_to_generator(spec.poly, t, c, cutoff, sub);
        // truncation gate: the verdict must survive a larger cutoff
        try {
            wider = compare_to_generator(spec.poly, t, c, cutoff + 4, sub);
        } catch (const DimensionOverflow &) {
            checked = false;
        }
    } catch (const std::invalid_argument &e) {
        throw Ineligible(e.what());
    }
    const bool gate = !checked || wider.distance < std::max(f.tol, r.distance);
    const bool pass = r.distance < f.tol && gate;
    json j{{"d", r.d},
           {"distance", r.distance},
           {"fidelity", r.fidelity},
           {"leakage", r.leakage},
           {"edge", r.edge},
           {"cutoff", cutoff},
           {"subspace", sub},
           {"hbar", c.hbar},
           {"tol", f.tol},
           {"truncation_gate", gate},
           {"pass", pass}};
    if (checked) j["distance_at_cutoff_plus_4"] = wider.distance;
    emit(f, j.dump(2));
    return pass ? kOk : kTolerance;
}

int cmd_table(const Flags &f) {
    const std::vector<TableRow> rows = gate_count_table(f.epsilon);
    if (f.out.empty()) {
        std::cout << render_table(rows);
    } else {
        json j = json::array();
        for (const auto &r : rows) j.push_back(to_json(r));
        emit(f, json{{"epsilon", f.epsilon}, {"rows", j}}.dump(2));
    }
    bool ok = true;
    for (const auto &r : rows) ok = ok && r.commutator.ok() && r.exact.ok() && r.generalized.ok();
    return ok ? kOk : kInternal;
}

int cmd_kerr(double chi, double lambda, double q, const Flags &f) {
    if (!(lambda > 0)) throw Ineligible("kerr: lambda must be positive");
    if (chi == 0) throw Ineligible("kerr: chi = 0 leaves a quadratic generator");
    const CubicResidual r = cubic_residual(chi, lambda, q, f.hbar);
    json j = to_json(r);
    if (f.cutoff > 0) {
        const int levels = f.subspace >= 0 ? f.subspace + 1 : 8;
        const DrivenKerrParams k{chi, r.cancellation.delta, r.cancellation.beta};
        const double dev = frame_fock_deviation(k, {lambda, r.y}, f.cutoff, levels, f.hbar);
        j["fock_check"] = {{"cutoff", f.cutoff}, {"levels", levels}, {"max_deviation", dev}};
    }
    emit(f, j.dump(2));
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"cvgate: continuous-variable gate synthesis"};
    app.require_subcommand(1);
    Flags f;
    auto common = [&](CLI::App *s) {
        s->add_option("--hbar", f.hbar, "value bound to hbar")->check(CLI::PositiveNumber);
        s->add_option("--out", f.out, "write output here instead of stdout");
        s->add_option("--seed", f.seed, "recorded only; no subcommand draws random numbers");
    };
    auto budget = [&](CLI::App *s) {
        s->add_option("--method", f.method, "gaussian, exact, exact-generalized, commutator, kerr or auto");
        s->add_option("--t", f.t, "gate time (decimal or a/b)");
        s->add_option("--epsilon", f.epsilon, "approximation budget")->check(CLI::PositiveNumber);
        s->add_option("--K", f.K, "repetitions per level (0 = from epsilon)")->check(CLI::NonNegativeNumber);
    };

    std::string target, circuit_path;
    CLI::App *dec = app.add_subcommand("decompose", "compile exp(i t H) to gates");
    dec->add_option("target", target, "generator, e.g. \"x1*x2^2\"")->required();
    budget(dec);
    common(dec);

    CLI::App *cnt = app.add_subcommand("count", "closed-form gate count, no circuit");
    cnt->add_option("target", target)->required();
    budget(cnt);
    common(cnt);

    CLI::App *ver = app.add_subcommand("verify", "compare a circuit with exp(i t H) in Fock space");
    ver->add_option("circuit", circuit_path, "circuit JSON file, - for stdin")->required();
    ver->add_option("target", target, "generator; 0 for the identity")->required();
    ver->add_option("--t", f.t);
    ver->add_option("--cutoff", f.cutoff, "Fock cutoff per mode (default 12)")->check(CLI::PositiveNumber);
    ver->add_option("--subspace", f.subspace, "max total photons compared")->check(CLI::NonNegativeNumber);
    ver->add_option("--tol", f.tol, "distance tolerance");
    ver->add_option("--out", f.out);
    ver->add_option("--seed", f.seed);

    CLI::App *tab = app.add_subcommand("table1", "published gate-count table with match flags");
    tab->add_option("--epsilon", f.epsilon)->check(CLI::PositiveNumber);
    tab->add_option("--out", f.out, "write JSON rows here");
    tab->add_option("--seed", f.seed);

    double chi = 1, lambda = 1, q = 3;
    CLI::App *ker = app.add_subcommand("kerr", "cubic generator from a driven Kerr frame");
    ker->add_option("chi", chi)->required();
    ker->add_option("lambda", lambda)->required();
    ker->add_option("q", q, "y = lambda^q (default 3)");
    ker->add_option("--cutoff", f.cutoff, "also compare with the Fock oracle at this cutoff");
    ker->add_option("--subspace", f.subspace, "highest Fock level compared (default 7)");
    common(ker);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInternal;
    }

    try {
        if (*dec) return cmd_decompose(target, f, false);
        if (*cnt) return cmd_decompose(target, f, true);
        if (*ver) return cmd_verify(circuit_path, target, f);
        if (*tab) return cmd_table(f);
        if (*ker) return cmd_kerr(chi, lambda, q, f);
    } catch (const Ineligible &e) {
        std::cerr << "cvgate: " << e.what() << "\n";
        return kIneligible;
    } catch (const IneligibleTarget &e) {
        std::cerr << "cvgate: ineligible target: " << e.what() << "\n";
        return kIneligible;
    } catch (const std::exception &e) {
        std::cerr << "cvgate: error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
