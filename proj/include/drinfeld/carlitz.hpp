/*
   Copyright 2026 The drinfeld-al Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DRINFELD_CARLITZ_HPP
#define DRINFELD_CARLITZ_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ratfunc.hpp"

namespace drinfeld {

inline long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

/**
 * Coefficients of the Carlitz polynomial C_a(X) = sum_i c_i X^{q^i},
 * built from C_t = tX + X^q by F_q-linearity and composition.
 */
inline std::vector<Poly> carlitz_coeffs(const Poly& a) {
    if (a.is_zero()) throw Error("Carlitz polynomial of zero");
    const Field* F = a.field();
    const int q = F->q();
    const Poly t = Poly::t(F);
    std::vector<Poly> power{Poly::one(F)};  // C_{t^j}
    std::vector<Poly> out(a.degree() + 1, Poly(F));
    for (int j = 0; j <= a.degree(); ++j) {
        if (j > 0) {
            std::vector<Poly> next(power.size() + 1, Poly(F));
            for (std::size_t i = 0; i < power.size(); ++i) {
                next[i] = next[i] + t * power[i];
                next[i + 1] = next[i + 1] + power[i].pow(q);
            }
            power = std::move(next);
        }
        Field::Elem c = a.coeff(j);
        if (c == 0) continue;
        for (std::size_t i = 0; i < power.size(); ++i) out[i] = out[i] + power[i].scaled(c);
    }
    return out;
}

/// C_a(X) as a dense coefficient vector in X (index = exponent).
inline std::vector<Poly> carlitz_poly(const Poly& a) {
    auto c = carlitz_coeffs(a);
    const Field* F = a.field();
    const long long q = F->q();
    std::vector<Poly> out(static_cast<std::size_t>(ipow(q, a.degree())) + 1, Poly(F));
    for (std::size_t i = 0; i < c.size(); ++i) out[static_cast<std::size_t>(ipow(q, static_cast<int>(i)))] = c[i];
    return out;
}

/// [i] = t^{q^i} - t
inline Poly carlitz_bracket(const Field* F, int i) {
    return Poly::monomial(F, 1, static_cast<int>(ipow(F->q(), i))) - Poly::t(F);
}

/// D_0 = 1, D_i = [i] D_{i-1}^q
inline Poly carlitz_D(const Field* F, int i) {
    Poly d = Poly::one(F);
    for (int j = 1; j <= i; ++j) d = carlitz_bracket(F, j) * d.pow(F->q());
    return d;
}

/// L_k = [k][k-1]...[1], the lcm of the monic polynomials of degree k.
inline Poly carlitz_L(const Field* F, int k) {
    Poly l = Poly::one(F);
    for (int j = 1; j <= k; ++j) l = l * carlitz_bracket(F, j);
    return l;
}

/**
 * Goss polynomials of a lattice with exponential e(x) = sum_i alpha_i x^{q^i},
 * alpha_0 = 1: G_1 = X, G_n = X (G_{n-1} + sum_{i>=1} alpha_i G_{n-q^i}),
 * G_n = 0 for n <= 0. Entries are filled on demand; fills are idempotent.
 */
class GossTable {
   public:
    /// finite: coefficients beyond alpha are zero (finite lattice).
    GossTable(const Field* F, std::vector<RatFunc> alpha, bool finite)
        : F_(F), alpha_(std::move(alpha)), finite_(finite) {}

    /// Carlitz lattice: alpha_i = 1 / D_i.
    static std::shared_ptr<GossTable> carlitz(const Field* F, int max_i = 4) {
        std::vector<RatFunc> alpha{RatFunc::one(F)};
        for (int i = 1; i <= max_i; ++i) alpha.push_back(RatFunc(carlitz_D(F, i)).inverse());
        return std::make_shared<GossTable>(F, std::move(alpha), false);
    }
    /// Finite lattice C[P] with e(x) = C_P(x) / P.
    static std::shared_ptr<GossTable> torsion(const Poly& P) {
        auto c = carlitz_coeffs(P);
        std::vector<RatFunc> alpha;
        for (auto& x : c) alpha.push_back(RatFunc(x, P));
        return std::make_shared<GossTable>(P.field(), std::move(alpha), true);
    }

    /// Dense coefficients of G_n in X (size n+1).
    std::vector<RatFunc> get(int n) {
        if (n <= 0) throw Error("Goss polynomial index must be positive");
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(table_.size()) < n) extend();
        return table_[n - 1];
    }
    /// Lowest exponent with a nonzero coefficient in G_n.
    int lowest_degree(int n) {
        auto g = get(n);
        for (std::size_t j = 0; j < g.size(); ++j)
            if (!g[j].is_zero()) return static_cast<int>(j);
        return static_cast<int>(g.size());
    }

   private:
    void extend() {
        const int n = static_cast<int>(table_.size()) + 1;
        std::vector<RatFunc> g(n + 1, RatFunc(F_));
        if (n == 1) {
            g[1] = RatFunc::one(F_);
        } else {
            auto add_shifted = [&](const std::vector<RatFunc>& src, const RatFunc& c) {
                for (std::size_t j = 0; j < src.size(); ++j)
                    if (!src[j].is_zero()) g[j + 1] += src[j] * c;
            };
            add_shifted(table_[n - 2], RatFunc::one(F_));
            long long qi = F_->q();
            std::size_t i = 1;
            for (; qi < n; ++i, qi *= F_->q()) {
                if (i >= alpha_.size()) {
                    if (finite_) break;
                    throw Error("Goss table needs more lattice coefficients");
                }
                if (!alpha_[i].is_zero()) add_shifted(table_[n - qi - 1], alpha_[i]);
            }
        }
        table_.push_back(std::move(g));
    }

    const Field* F_;
    std::vector<RatFunc> alpha_;
    bool finite_;
    std::vector<std::vector<RatFunc>> table_;
    std::mutex mu_;
};

/// Coefficients of z / e_C(z) up to z^N, e_C(z) = sum_i z^{q^i} / D_i.
inline std::vector<RatFunc> bernoulli_carlitz(const Field* F, int N) {
    // z / e_C(z) = 1 / (sum_i z^{q^i - 1} / D_i), a series in z^{q-1}
    const long long q = F->q();
    std::vector<std::pair<int, RatFunc>> den;  // sparse terms of e_C(z)/z
    for (int i = 1; ipow(q, i) - 1 <= N; ++i)
        den.push_back({static_cast<int>(ipow(q, i) - 1), RatFunc(carlitz_D(F, i)).inverse()});
    std::vector<RatFunc> c(N + 1, RatFunc(F));
    c[0] = RatFunc::one(F);
    for (int n = 1; n <= N; ++n) {
        RatFunc s(F);
        for (auto& [e, v] : den)
            if (e <= n) s += v * c[n - e];
        c[n] = -s;
    }
    return c;
}

}  // namespace drinfeld

#endif
