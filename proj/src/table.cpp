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


#include "cvgate/table.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cvgate/approx.hpp"
#include "cvgate/exact.hpp"
#include "cvgate/power_sum.hpp"

namespace cvgate {

namespace {

struct Printed {
    const char *target;
    std::vector<int> s;
    double commutator, exact, generalized;
};

const std::vector<Printed> &printed_rows() {
    static const std::vector<Printed> rows = {
        {"x^4", {4}, 1.8e4, 29, -1},
        {"x_j^2 x_k^2", {2, 2}, 2.8e4, 119, 279},
        {"x_j x_k^3", {1, 3}, 2.9e8, 269, 93},
        {"x_j x_k x_l", {1, 1, 1}, 4.2e8, 17, 20},
        {"x_j^2 x_k x_l", {2, 1, 1}, 1.4e9, 249, 198},
        {"x_j x_k x_l x_m", {1, 1, 1, 1}, 6.9e13, 440, 280},
        {"x^6", {6}, 1.2e13, 809, -1},
        {"x_j^2 x_k^4", {2, 4}, 2.4e13, 3320, 12165},
    };
    return rows;
}

std::string fmt(double v) {
    if (v < 0) return "-";
    char buf[32];
    if (v < 1e5)
        std::snprintf(buf, sizeof buf, "%.0f", v);
    else
        std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

QuadPoly product_of(const std::vector<int> &s) {
    QuadPoly h(Coeff(1));
    for (size_t i = 0; i < s.size(); ++i) h = h * QuadPoly::x(static_cast<int>(i), s[i]);
    return h;
}

int active(const PowerSumTerm &t) {
    int k = 0;
    for (const auto &w : t.weights) k += sgn(w) != 0;
    return k;
}

// how the exact construction spends its gates
std::vector<std::string> exact_ledger(const std::vector<int> &s, long long ours, double printed) {
    std::vector<std::string> out;
    int total = 0;
    bool ones = true;
    for (int v : s) {
        total += v;
        ones = ones && v == 1;
    }
    const long long p = cost_power(total);
    if (ones && s.size() >= 3) {
        const PowerSumExpansion e = polarization_expansion(static_cast<int>(s.size()));
        std::map<int, int> by_width;
        for (const auto &t : e.terms) ++by_width[active(t)];
        out.push_back("inclusion-exclusion over " + std::to_string(e.terms.size()) + " subsets, each exp(i c L^" +
                      std::to_string(total) + ") for a linear form L of k modes");
        for (auto [k, n] : by_width)
            out.push_back(std::to_string(n) + " term(s) with k = " + std::to_string(k) + ": " + std::to_string(p) +
                          " + 2*(k-1) = " + std::to_string(p + 2 * (k - 1)) + " gates each");
    } else if (s.size() == 3 && total == 4) {
        const long long cell = cost_power(4) * 4 + 3;
        out.push_back("x_k x_l = [(x_k + x_l)^2 - (x_k - x_l)^2] / 4 after a 50:50 beamsplitter");
        out.push_back("two exp(i c x_j^2 y^2) cells of " + std::to_string(cell) + " gates; 3 Gaussian gates for the frame");
    }
    out.push_back("total " + std::to_string(ours) + ", printed " + fmt(printed) + "; the printed construction of this row" +
                  " is not spelled out, so the difference is left as is");
    return out;
}

std::vector<std::string> generalized_ledger(const std::vector<int> &s, long long ours, double printed) {
    const PowerSumExpansion e = product_as_power_sum(s);
    int total = 0;
    for (int v : s) total += v;
    const long long per = cost_power(total) + 2 * (static_cast<long long>(s.size()) - 1);
    std::vector<std::string> out;
    out.push_back(std::to_string(e.terms.size()) + " power-sum terms" +
                  (e.halved_index >= 0 ? " (odd range halved)" : "") + " x (" + std::to_string(cost_power(total)) +
                  " + 2*" + std::to_string(s.size() - 1) + ") = " + std::to_string(ours));
    const double terms = printed / static_cast<double>(per);
    if (std::abs(terms - std::round(terms)) < 1e-12)
        out.push_back("printed " + fmt(printed) + " = " + fmt(std::round(terms)) + " terms at the same per-term cost");
    return out;
}

TableCell count_cell(double ours, double printed, std::vector<std::string> ledger) {
    TableCell c{ours, printed, CellStatus::Mismatch, {}};
    if (ours < 0 && printed < 0)
        c.status = CellStatus::Dash;
    else if (ours == printed)
        c.status = CellStatus::Exact;
    else if (!ledger.empty()) {
        c.status = CellStatus::Ledger;
        c.ledger = std::move(ledger);
    }
    return c;
}

}  // namespace

std::string status_name(CellStatus s) {
    switch (s) {
        case CellStatus::Exact: return "exact";
        case CellStatus::Band: return "band (3x)";
        case CellStatus::Dash: return "dash";
        case CellStatus::Ledger: return "ledger";
        case CellStatus::Mismatch: return "mismatch";
    }
    return "?";
}

std::vector<TableRow> gate_count_table(double epsilon) {
    std::vector<TableRow> out;
    for (const Printed &pr : printed_rows()) {
        TableRow row{pr.target, pr.s, {}, {}, {}};

        ApproximationBudget b;
        b.epsilon = epsilon;
        const DecompositionReport r = compile_approximate(product_of(pr.s), b, 2.0, false);
        TableCell &c = row.commutator;
        c.value = r.closed_form_count;
        c.printed = pr.commutator;
        const double ratio = c.value / c.printed;
        c.status = ratio <= 3 && ratio >= 1.0 / 3 ? CellStatus::Band : CellStatus::Mismatch;
        char buf[96];
        std::snprintf(buf, sizeof buf, "K = %lld per level, %lld levels, ratio to printed %.2f",
                      r.repetitions.at("K_inner"), r.repetitions.at("levels"), ratio);
        c.ledger.push_back(buf);

        const long long ex = exact_count(pr.s, ExactMethod::Classic);
        row.exact = count_cell(static_cast<double>(ex), pr.exact,
                               ex >= 0 && ex != pr.exact ? exact_ledger(pr.s, ex, pr.exact) : std::vector<std::string>{});

        const long long ge = generalized_convention_count(pr.s);
        row.generalized =
            count_cell(static_cast<double>(ge), pr.generalized,
                       ge >= 0 && ge != pr.generalized ? generalized_ledger(pr.s, ge, pr.generalized)
                                                       : std::vector<std::string>{});
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::json to_json(const TableRow &r) {
    auto cell = [](const TableCell &c) {
        nlohmann::json j{{"status", status_name(c.status)}, {"ledger", c.ledger}};
        j["value"] = c.value < 0 ? nlohmann::json(nullptr) : nlohmann::json(c.value);
        j["printed"] = c.printed < 0 ? nlohmann::json(nullptr) : nlohmann::json(c.printed);
        return j;
    };
    return {{"target", r.target},
            {"exponents", r.exponents},
            {"commutator", cell(r.commutator)},
            {"exact", cell(r.exact)},
            {"generalized", cell(r.generalized)}};
}

std::string render_table(const std::vector<TableRow> &rows) {
    std::ostringstream os;
    char line[256];
    auto cell = [](const TableCell &c) { return fmt(c.value) + " / " + fmt(c.printed) + " " + status_name(c.status); };
    std::snprintf(line, sizeof line, "%-18s %-34s %-24s %-24s\n", "target", "commutator (eps, band 3x)", "exact",
                  "generalized");
    os << line;
    for (const auto &r : rows) {
        std::snprintf(line, sizeof line, "%-18s %-34s %-24s %-24s\n", r.target.c_str(), cell(r.commutator).c_str(),
                      cell(r.exact).c_str(), cell(r.generalized).c_str());
        os << line;
    }
    os << "\ncells are ours / printed\n";
    for (const auto &r : rows)
        for (const auto *c : {&r.exact, &r.generalized})
            if (c->status == CellStatus::Ledger) {
                os << "\n" << r.target << (c == &r.exact ? ", exact:" : ", generalized:") << "\n";
                for (const auto &l : c->ledger) os << "  " << l << "\n";
            }
    return os.str();
}

}  // namespace cvgate
