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

#include "cvgate/power_sum.hpp"

#include <map>
#include <stdexcept>

namespace cvgate {

namespace {

Rational binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace

PowerSumExpansion product_as_power_sum(const std::vector<int> &s_i) {
    if (s_i.empty()) throw std::invalid_argument("product_as_power_sum: no modes");
    PowerSumExpansion out;
    for (int v : s_i) {
        if (v < 1) throw std::invalid_argument("product_as_power_sum: exponents must be >= 1");
        out.s += v;
    }
    for (size_t i = 0; i < s_i.size(); ++i)
        if (s_i[i] % 2 == 1) {
            out.halved_index = static_cast<int>(i);
            break;
        }

    mpz_class sfac;
    mpz_fac_ui(sfac.get_mpz_t(), static_cast<unsigned long>(out.s));
    Rational prefactor(out.halved_index >= 0 ? 2 : 1, sfac);
    prefactor.canonicalize();

    const size_t n = s_i.size();
    std::vector<int> hi(n);
    for (size_t i = 0; i < n; ++i)
        hi[i] = (static_cast<int>(i) == out.halved_index) ? (s_i[i] - 1) / 2 : s_i[i];

    std::vector<int> v(n, 0);
    while (true) {
        Rational c = prefactor;
        int vsum = 0;
        PowerSumTerm t;
        for (size_t i = 0; i < n; ++i) {
            c *= binom(s_i[i], v[i]);
            vsum += v[i];
            t.weights.push_back(Rational(s_i[i], 2) - v[i]);
            t.weights.back().canonicalize();
        }
        t.coeff = (vsum % 2) ? Rational(-c) : c;
        out.terms.push_back(std::move(t));
        // odometer, last index fastest
        int i = static_cast<int>(n) - 1;
        while (i >= 0 && v[i] == hi[i]) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

PowerSumExpansion polarization_expansion(int n) {
    if (n < 1) throw std::invalid_argument("polarization_expansion: n must be >= 1");
    PowerSumExpansion out;
    out.s = n;
    mpz_class nfac;
    mpz_fac_ui(nfac.get_mpz_t(), static_cast<unsigned long>(n));
    // largest subsets first, matching the usual presentation of the cube identity
    for (int size = n; size >= 1; --size) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            PowerSumTerm t;
            for (int i = 0; i < n; ++i) t.weights.push_back(Rational((mask >> i) & 1u));
            t.coeff = Rational(((n - size) % 2) ? -1 : 1, nfac);
            t.coeff.canonicalize();
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

QuadPoly expand_power_sum(const PowerSumExpansion &e, const std::vector<int> &modes) {
    // positions commute, so expand in exponent vectors and build the
    // noncommutative polynomial once at the end
    using Powers = std::vector<int>;
    std::map<Powers, Rational> total;
    for (const auto &t : e.terms) {
        const size_t n = t.weights.size();
        std::map<Powers, Rational> acc{{Powers(n, 0), Rational(1)}};
        for (int k = 0; k < e.s; ++k) {
            std::map<Powers, Rational> next;
            for (const auto &[pw, c] : acc)
                for (size_t i = 0; i < n; ++i) {
                    if (sgn(t.weights[i]) == 0) continue;
                    Powers q = pw;
                    ++q[i];
                    next[q] += c * t.weights[i];
                }
            acc = std::move(next);
        }
        for (const auto &[pw, c] : acc) total[pw] += c * t.coeff;
    }
    QuadPoly out;
    for (const auto &[pw, c] : total) {
        if (sgn(c) == 0) continue;
        std::map<int, int> by_mode;
        for (size_t i = 0; i < pw.size(); ++i)
            if (pw[i]) by_mode[modes.at(i)] += pw[i];
        std::vector<ModePower> f;
        for (const auto &[m, d] : by_mode) f.push_back({m, d, 0});
        out += QuadPoly(QuadMonomial::from_powers(f), Coeff(c));
    }
    return out;
}

}  // namespace cvgate
