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

#ifndef DRINFELD_FORMS_HPP
#define DRINFELD_FORMS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "hecke_series.hpp"

namespace drinfeld {

/// A form of given level and weight/type: its expansion at infinity and,
/// where known, the expansions of its Atkin-Lehner images.
struct FormModel {
    std::string name;
    IdealA level;
    WeightType wt;
    USeries exp_inf;
    std::map<IdealA, USeries> al_images;

    const USeries& al_image(const IdealA& d) const {
        auto it = al_images.find(d);
        if (it == al_images.end()) throw Error("insufficient model: no Atkin-Lehner image for " + format_poly(d.gen()));
        return it->second;
    }
};

namespace detail {

inline std::shared_ptr<GossTable> carlitz_goss(const Field* F) {
    static std::map<const Field*, std::shared_ptr<GossTable>> m;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = m[F];
    if (!slot) slot = GossTable::carlitz(F);
    return slot;
}

inline void check_grade(const USeries& f) {
    if (f.pi_grade() != 0) throw InconsistencyError("series is not homogeneous of period grade 0");
}

}  // namespace detail

/// G_n for the Carlitz lattice, alpha_i = 1/D_i.
inline std::vector<RatFunc> goss_poly(const Field* F, int n) { return detail::carlitz_goss(F)->get(n); }

/**
 * g_k = (-1)^k L_k (c_N + sum_{a monic} G_N(u(az))), N = q^k - 1, where c_N
 * is the z^N coefficient of z / e_C(z). Level (1), weight q^k - 1, type 0.
 */
inline FormModel eisenstein_gk(const Field* F, int k, int N) {
    if (k < 1) throw Error("g_k needs k >= 1");
    const long long q = F->q();
    const int Nk = static_cast<int>(ipow(q, k) - 1);
    auto table = detail::carlitz_goss(F);
    auto G = table->get(Nk);
    const int low = table->lowest_degree(Nk);
    USeries Gs = useries_zero(F, N);
    for (int j = 0; j < N && j < static_cast<int>(G.size()); ++j) Gs.coeff(j) = G[j];
    RatFunc cN = bernoulli_carlitz(F, Nk)[Nk];
    USeries sum = USeries::constant(RatFunc(F), cN, N);
    for (int deg = 0; ipow(q, deg) * low < N; ++deg)
        for (auto& a : monic_polys_of_degree(F, deg)) sum = sum + Gs.compose(u_of_az(a, N));
    RatFunc scale(carlitz_L(F, k));
    if (k % 2 == 1) scale = -scale;
    USeries g = sum.scaled(scale);
    detail::check_grade(g);
    return {"g_" + std::to_string(k), IdealA::unit(F), {Nk, 0}, g, {}};
}

/// The level-m form f seen at level mp: f|W_p^{mp} = D_p f.
inline FormModel model_D1(const FormModel& f, const IdealA& m, const Poly& P) {
    IdealA p(P);
    if (!f.level.divides(m)) throw Error("D_1 needs the form level to divide m");
    FormModel r{"D_1(" + f.name + ")", m * p, f.wt, f.exp_inf, {}};
    r.al_images.emplace(p, series_Dp(f.exp_inf, f.wt, P));
    return r;
}

/// D_p f at level mp: its W_p-image is P^{2m-k} f.
inline FormModel model_Dp(const FormModel& f, const IdealA& m, const Poly& P) {
    IdealA p(P);
    if (!f.level.divides(m)) throw Error("D_p needs the form level to divide m");
    FormModel r{"D_p(" + f.name + ")", m * p, f.wt, series_Dp(f.exp_inf, f.wt, P), {}};
    r.al_images.emplace(p, f.exp_inf.scaled(RatFunc(P).pow(2LL * f.wt.m - f.wt.k)));
    return r;
}

inline FormModel model_product(const FormModel& f, const FormModel& g) {
    IdealA lvl(lcm(f.level.gen(), g.level.gen()));
    FormModel r{f.name + "*" + g.name, lvl, {f.wt.k + g.wt.k, f.wt.m + g.wt.m}, f.exp_inf * g.exp_inf, {}};
    for (auto& [d, s] : f.al_images) {
        auto it = g.al_images.find(d);
        if (it != g.al_images.end()) r.al_images.emplace(d, s * it->second);
    }
    return r;
}

inline FormModel model_power(const FormModel& f, int n) {
    if (n < 1) throw Error("power needs n >= 1");
    FormModel r = f;
    for (int i = 1; i < n; ++i) r = model_product(r, f);
    r.name = f.name + "^" + std::to_string(n);
    return r;
}

/// The W_d-image as a model; its own image follows from the involution law.
inline FormModel model_al_image(const FormModel& f, const Poly& delta) {
    IdealA d(delta);
    FormModel r{"W(" + f.name + ")", f.level, f.wt, f.al_image(d), {}};
    r.al_images.emplace(d, f.exp_inf.scaled(RatFunc(d.gen()).pow(2LL * f.wt.m - f.wt.k)));
    return r;
}

/**
 * g_(0) = P^{k'} g_d^n - P^{2k'} g_d^n|W_p with k' = n(q^d - 1), and
 * g_(r) = g_(0)^{p^r}. Level mp, weight p^r k', type 0.
 */
inline FormModel vincent_g(int n, int r, const Poly& pi, const Poly& P, int N) {
    const Field* F = P.field();
    if (n < 1 || r < 0) throw Error("vincent_g needs n >= 1 and r >= 0");
    if (!gcd(pi, P).is_one()) throw Error("hypothesis (pi,P)=1");
    const int d = P.degree();
    FormModel gd = eisenstein_gk(F, d, N);
    USeries g = series_pow(gd.exp_inf, n);
    const long long kp = static_cast<long long>(n) * (ipow(F->q(), d) - 1);
    WeightType wt0{static_cast<int>(kp), 0};
    USeries Dg = series_Dp(g, wt0, P);
    RatFunc Pk = RatFunc(P).pow(kp);
    USeries g0 = g.scaled(Pk) - Dg.scaled(Pk * Pk);
    USeries w0 = (Dg - g).scaled(Pk);
    USeries gr = series_frobenius(g0, r).truncated(N);
    USeries wr = series_frobenius(w0, r).truncated(N);
    IdealA mp = IdealA(pi) * IdealA(P);
    FormModel out{"g_(" + std::to_string(r) + ")", mp, {static_cast<int>(kp * ipow(F->p(), r)), 0}, gr, {}};
    out.al_images.emplace(IdealA(P), wr);
    return out;
}

/// Tr(f) = f + P^{-m} U_p(f|W_p), precision ceil(N / q^d).
inline USeries trace_via_eqTr(const FormModel& f, const Poly& P, UpBackend b = UpBackend::Goss) {
    const USeries& w = f.al_image(IdealA(P));
    USeries up = series_Up(w, P, b).scaled(RatFunc(P).pow(-f.wt.m));
    return (f.exp_inf + up).truncated(up_precision(f.exp_inf.prec(), P));
}

/**
 * Evaluates a canonical table on g|E, with g a level-one form and
 * E = (1 0; 0 1) or (P 0; 0 1). Each coset representative R is reduced to
 * E R = s * gamma * (a b; 0 d) with gamma in GL2(A); d must divide P. The
 * sum is formed in K(lambda)[[s]] with s = u(z/P) and then rewritten in u.
 */
inline USeries evaluate_table(const CanonicalOperator& op, const FormModel& g, bool apply_Dp, const Poly& P, int N) {
    const Field* F = P.field();
    if (!g.level.is_unit()) throw Error("table evaluation needs a level-one form");
    auto ctx = detail::cyc_field(P);
    const int k = op.wt.k, m = op.wt.m;
    if (!(op.wt == g.wt)) throw Error("table evaluation: weight/type mismatch");
    CycSeries acc(CycElem(ctx), N);
    CycSeries gc = to_cyc(g.exp_inf.truncated(N), ctx);
    Mat2 E = apply_Dp ? Mat2(P, Poly(F), Poly(F), Poly::one(F)) : Mat2::identity(F);
    for (auto& [key, coeff] : op.table) {
        Mat2 M = E * coset_representative(key, op.domain);
        PrimitiveForm pf = primitive_form(M);
        HermiteForm hf = hnf(pf.primitive);
        auto h = integral_entries(hf.H);
        const Poly& a = h[0];
        const Poly& b = h[1];
        const Poly& d = h[3];
        if (!d.divides(P)) throw Error("table evaluation: denominator does not divide P");
        Poly a1 = a * (P / d), b1 = b * (P / d);
        CycSeries us = u_affine_in_s(ctx, a1, b1 % P, N);
        CycSeries term = gc.compose(us);
        RatFunc scal = coeff * pf.scale.pow(2LL * m - k) * RatFunc(a * d).pow(m) * RatFunc(d).pow(-k);
        acc = acc + term.scaled(scal);
    }
    return recompress(from_cyc(acc), P);
}

}  // namespace drinfeld

#endif
