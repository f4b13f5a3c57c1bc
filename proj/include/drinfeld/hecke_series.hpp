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

#ifndef DRINFELD_HECKE_SERIES_HPP
#define DRINFELD_HECKE_SERIES_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "operator.hpp"
#include "useries.hpp"

namespace drinfeld {

using CycSeries = Series<CycElem>;

namespace detail {

inline std::string cache_key(const Poly& P) {
    return std::to_string(P.field()->p()) + "/" + std::to_string(P.field()->e()) + "/" + format_modulus(P.field()) +
           "/" + format_poly(P);
}

template <class T, class Make>
std::shared_ptr<T> cached(std::map<std::string, std::shared_ptr<T>>& m, std::mutex& mu, const std::string& key,
                          Make make) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = m.find(key);
        if (it != m.end()) return it->second;
    }
    auto v = make();
    std::lock_guard<std::mutex> lock(mu);
    return m.try_emplace(key, v).first->second;
}

inline std::shared_ptr<GossTable> torsion_goss(const Poly& P) {
    static std::map<std::string, std::shared_ptr<GossTable>> m;
    static std::mutex mu;
    return cached(m, mu, cache_key(P), [&] { return GossTable::torsion(P); });
}

inline std::shared_ptr<const CycField> cyc_field(const Poly& P) {
    static std::map<std::string, std::shared_ptr<const CycField>> m;
    static std::mutex mu;
    return cached(m, mu, cache_key(P), [&] { return std::make_shared<const CycField>(P); });
}

/// binom(n, k) mod p by Lucas.
inline int binom_mod_p(long long n, long long k, int p) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    while (n > 0 || k > 0) {
        long long ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        long long c = 1;
        for (long long i = 0; i < ki; ++i) c = c * (ni - i) % p;
        long long dnm = 1;
        for (long long i = 1; i <= ki; ++i) dnm = dnm * i % p;
        // p prime: inverse by Fermat
        long long inv = 1, b = dnm, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        r = r * c % p * inv % p;
        n /= p;
        k /= p;
    }
    return static_cast<int>(r);
}

/// binom(-n, j) = (-1)^j binom(n + j - 1, j), as an element of F_p.
inline Field::Elem binom_neg(const Field* F, long long n, long long j) {
    int b = binom_mod_p(n + j - 1, j, F->p());
    if (j % 2 == 1) b = (F->p() - b) % F->p();
    return F->from_int(b);
}

}  // namespace detail

inline int up_precision(int N, const Poly& P) {
    long long Q = ipow(P.field()->q(), P.degree());
    return static_cast<int>((N + Q - 1) / Q);
}

/// D_p f = f |_{k,m} (P 0; 0 1) = P^m f(u(Pz)).
inline USeries series_Dp(const USeries& f, WeightType wt, const Poly& P) {
    const int N = f.prec();
    USeries sub = f.compose(u_of_az(P, std::max(N, 1)));
    return sub.truncated(N).scaled(RatFunc(P).pow(wt.m));
}

/**
 * Goss backend: U_p(u^n) = G_n(P u) for the finite lattice C[P] of
 * P-torsion, whose exponential is C_P(x)/P. Precision ceil(N / q^d).
 */
inline USeries series_Up_goss(const USeries& f, const Poly& P) {
    const Field* F = P.field();
    const int N = f.prec();
    const int out = up_precision(N, P);
    auto table = detail::torsion_goss(P);
    USeries r = useries_zero(F, out);
    std::vector<RatFunc> Ppow{RatFunc::one(F)};
    for (int j = 1; j < out; ++j) Ppow.push_back(Ppow.back() * RatFunc(P));
    for (int n = 1; n < N; ++n) {
        if (f[n].is_zero()) continue;
        auto g = table->get(n);
        for (int j = 0; j < out && j < static_cast<int>(g.size()); ++j)
            if (!g[j].is_zero()) r.coeff(j) += f[n] * g[j] * Ppow[j];
    }
    return r;
}

enum class Fault { None, Galois, Residual };

/// Rewrites G(s), s = u(z/P), as H(u) with u = u(P * (z/P)); nonzero
/// remainder is an internal inconsistency.
inline USeries recompress(const USeries& G, const Poly& P) {
    const Field* F = P.field();
    const int N = G.prec();
    const int Q = static_cast<int>(ipow(F->q(), P.degree()));
    const int out = up_precision(N, P);
    USeries uP = u_of_az(P, N);  // u as a series in s, u = s^Q + ...
    USeries rem = G;
    USeries H = useries_zero(F, out);
    USeries upow = useries_one(F, N);
    for (int j = 0; j < out; ++j) {
        // leading coefficient of u^j in s is 1 (P monic)
        RatFunc b = rem[j * Q];
        H.coeff(j) = b;
        if (!b.is_zero()) rem = rem - upow.scaled(b);
        for (int i = j * Q; i < std::min(N, (j + 1) * Q); ++i)
            if (!rem[i].is_zero())
                throw InconsistencyError("recompression residual at s^" + std::to_string(i) + ": " +
                                         format_ratfunc(rem[i]));
        upow = (upow * uP).truncated(N);
    }
    return H;
}

/// Power sums S_j = sum_{deg Q < d} C_Q(lambda)^j, j < n.
inline std::vector<CycElem> torsion_power_sums(const std::shared_ptr<const CycField>& ctx, int n, Fault fault) {
    const Field* F = ctx->field();
    const Poly& P = ctx->P();
    std::vector<CycElem> S(n, CycElem(ctx));
    bool corrupted = false;
    for (auto& Q : polys_below_degree(F, P.degree())) {
        CycElem c = carlitz_torsion(ctx, Q);
        if (fault == Fault::Galois && !corrupted && !Q.is_zero()) {
            c = c + CycElem::lambda(ctx) * RatFunc(Poly::t(F));
            corrupted = true;
        }
        CycElem pw(ctx, RatFunc::one(F));
        for (int j = 0; j < n; ++j) {
            S[j] = S[j] + pw;
            pw = pw * c;
        }
    }
    return S;
}

/**
 * Cyclotomic backend: U_p f = sum_Q f(s / (1 + c_Q s)) with s = u(z/P) and
 * c_Q = C_Q(lambda), summed in K(lambda)[[s]], checked to lie in K[[s]],
 * then rewritten in u.
 */
inline USeries series_Up_cyclotomic(const USeries& f, const Poly& P, Fault fault = Fault::None) {
    const Field* F = P.field();
    const int N = f.prec();
    auto ctx = detail::cyc_field(P);
    auto S = torsion_power_sums(ctx, N, fault);
    // sum_Q (s/(1+c_Q s))^n = sum_j binom(-n, j) S_j s^{n+j}
    std::vector<CycElem> G(N, CycElem(ctx));
    for (int n = 1; n < N; ++n) {
        if (f[n].is_zero()) continue;
        for (int j = 0; n + j < N; ++j) {
            Field::Elem b = detail::binom_neg(F, n, j);
            if (b == 0) continue;
            G[n + j] = G[n + j] + S[j] * (f[n] * RatFunc(Poly::constant(F, b)));
        }
    }
    // the constant term contributes q^d f_0 = 0
    USeries Gs = useries_zero(F, N);
    for (int i = 0; i < N; ++i) {
        if (!G[i].in_base())
            throw InconsistencyError("shift sum has a nonzero lambda-component at s^" + std::to_string(i));
        Gs.coeff(i) = G[i].base_part();
    }
    if (fault == Fault::Residual && N > 1) Gs.coeff(1) += RatFunc::one(F);
    return recompress(Gs, P);
}

enum class UpBackend { Goss, Cyclotomic };

inline USeries series_Up(const USeries& f, const Poly& P, UpBackend b = UpBackend::Goss) {
    return b == UpBackend::Goss ? series_Up_goss(f, P) : series_Up_cyclotomic(f, P);
}

/// T_p f = P^{k-m} D_p f + U_p f.
inline USeries series_Tp(const USeries& f, WeightType wt, const Poly& P, UpBackend b = UpBackend::Goss) {
    return series_Dp(f, wt, P).scaled(RatFunc(P).pow(wt.k - wt.m)) + series_Up(f, P, b);
}

/// u((a z + b) / P) in s = u(z/P): 1 / (C_a(1/s) + C_b(lambda)).
inline CycSeries u_affine_in_s(const std::shared_ptr<const CycField>& ctx, const Poly& a, const Poly& b, int N) {
    const Field* F = ctx->field();
    CycElem zero(ctx);
    auto cp = carlitz_poly(a);
    const int Q = static_cast<int>(cp.size()) - 1;
    if (N <= Q) return CycSeries(zero, N);
    // s^Q (C_a(1/s) + c) = sum_j cp[j] s^{Q-j} + c s^Q
    CycSeries den(zero, N - Q);
    for (int j = 0; j <= Q; ++j)
        if (Q - j < N - Q && !cp[j].is_zero()) den.coeff(Q - j) = CycElem(ctx, RatFunc(cp[j]));
    if (Q < N - Q) den.coeff(Q) = den[Q] + carlitz_torsion(ctx, b);
    // constant term lead(a) is a unit of F_q
    Field::Elem inv = F->inv(a.lead());
    CycSeries invd = den.inverse([&](const CycElem&) { return CycElem(ctx, RatFunc(Poly::constant(F, inv))); });
    return invd.shifted(Q);
}

/// Embeds a K-series into K(lambda)[[x]].
inline CycSeries to_cyc(const USeries& f, const std::shared_ptr<const CycField>& ctx) {
    CycSeries r(CycElem(ctx), f.prec());
    for (int i = 0; i < f.prec(); ++i)
        if (!f[i].is_zero()) r.coeff(i) = CycElem(ctx, f[i]);
    return r;
}

/// Projects to K[[x]], failing on a nonzero lambda-component.
inline USeries from_cyc(const CycSeries& g) {
    const Field* F = g.zero().ctx()->field();
    USeries r = useries_zero(F, g.prec());
    for (int i = 0; i < g.prec(); ++i) {
        if (!g[i].in_base()) throw InconsistencyError("lambda-component at x^" + std::to_string(i));
        r.coeff(i) = g[i].base_part();
    }
    return r;
}

}  // namespace drinfeld

#endif
