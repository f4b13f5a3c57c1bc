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

#ifndef DRINFELD_COSETS_HPP
#define DRINFELD_COSETS_HPP

#include <algorithm>
#include <compare>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mat2.hpp"

namespace drinfeld {

/// Canonical point of P^1(A/n): (c : d) reduced mod n, with c replaced by
/// the monic divisor gcd(c, n) and d minimized over the remaining units.
struct P1Point {
    Poly c, d;
    friend bool operator==(const P1Point&, const P1Point&) = default;
    friend auto operator<=>(const P1Point&, const P1Point&) = default;
};

inline P1Point p1_point(const Poly& c_in, const Poly& d_in, const IdealA& n) {
    const Poly& nu = n.gen();
    const Field* F = nu.field();
    if (n.is_unit()) return {Poly(F), Poly(F)};
    Poly c = c_in % nu, d = d_in % nu;
    if (c.is_zero() && d.is_zero()) throw Error("non-primitive row");
    Poly cd = c.is_zero() ? d : (d.is_zero() ? c : gcd(c, d));
    if (!gcd(cd, nu).is_one()) throw Error("non-primitive row");
    Poly g = gcd(c, nu);
    if (g == nu) return {Poly(F), Poly::one(F)};
    Poly n1 = nu / g;
    // u0 * (c/g) = 1 mod n1, lifted to a unit mod n
    Poly u0 = gcd_bezout(c / g, n1).u;
    auto ws = polys_below_degree(F, g.degree());
    Poly u;
    for (auto& w : ws) {
        Poly cand = (u0 + n1 * w) % nu;
        if (!cand.is_zero() && gcd(cand, nu).is_one()) {
            u = cand;
            break;
        }
    }
    Poly d1 = (u * d) % nu;
    Poly best;
    bool have = false;
    for (auto& w : ws) {
        Poly unit = Poly::one(F) + n1 * w;
        if (!gcd(unit, nu).is_one()) continue;
        Poly cand = (d1 * unit) % nu;
        if (!have || cand < best) {
            best = cand;
            have = true;
        }
    }
    return {g, best.field() ? best : Poly(F)};
}

/// Matrix in GL2(A) with determinant 1 whose bottom row is the canonical
/// representative of the point.
inline Mat2 p1_lift(const P1Point& pt, const IdealA& n) {
    const Field* F = n.field();
    if (n.is_unit() || pt.c.is_zero()) return Mat2::identity(F);
    if (pt.d.is_zero()) return Mat2(Poly(F), -Poly::one(F), Poly::one(F), Poly(F));
    // c is a monic divisor of n and gcd(c, d) = 1
    Bezout bz = gcd_bezout(pt.d, pt.c);
    return Mat2(bz.u, -bz.v, pt.c, pt.d);
}

/// Number of points of P^1(A/n), i.e. the index [GL2(A) : Gamma0(n)].
inline long long p1_size(const IdealA& n) {
    const int q = n.field()->q();
    auto qpow = [q](int d) {
        long long r = 1;
        for (int i = 0; i < d; ++i) r *= q;
        return r;
    };
    long long num = qpow(n.degree());
    for (auto& pp : n.prime_power_parts()) {
        // smallest nonunit divisor of a prime power is the prime itself
        int dp = pp.degree();
        for (auto& d : monic_divisors(pp.gen()))
            if (d.degree() >= 1) dp = std::min(dp, d.degree());
        num = num / qpow(dp) * (qpow(dp) + 1);
    }
    return num;
}

/// Label of the left coset Gamma0(n) * M for a primitive matrix M.
struct CosetKey {
    Poly h_a, h_b, h_d;  // Hermite form (h_a h_b; 0 h_d)
    P1Point p1;
    friend bool operator==(const CosetKey&, const CosetKey&) = default;
    friend auto operator<=>(const CosetKey&, const CosetKey&) = default;

    Mat2 hnf() const { return Mat2(h_a, h_b, Poly(h_a.field()), h_d); }
    bool is_identity() const { return h_a.is_one() && h_b.is_zero() && h_d.is_one() && p1.c.is_zero(); }
};

struct KeyedMatrix {
    CosetKey key;
    RatFunc scalar_adjust;  // f|M = scalar_adjust * f|rep(key)
};

/**
 * Writes M = s * delta * M* with delta in Gamma0(n) and returns the label
 * of M* together with s^(2m-k), the factor a slash-operator coefficient
 * picks up when M is replaced by its canonical coset.
 */
inline KeyedMatrix coset_key(const Mat2& M, const IdealA& n, int k, int m) {
    if (M.det().is_zero()) throw Error("singular matrix in coset_key");
    PrimitiveForm pf = primitive_form(M);
    HermiteForm hf = hnf(pf.primitive);
    // M0 = eps^{-1} H and eps^{-1} = adj(eps) / det(eps)
    Mat2 epsinv = hf.eps.adjugate();
    auto ent = integral_entries(epsinv);
    P1Point pt = p1_point(ent[2], ent[3], n);
    auto h = integral_entries(hf.H);
    return {CosetKey{h[0], h[1], h[3], pt}, pf.scale.pow(2LL * m - k)};
}

/// A representative matrix of the coset with the given label.
inline Mat2 coset_representative(const CosetKey& key, const IdealA& n) { return p1_lift(key.p1, n) * key.hnf(); }

inline bool in_gamma0(const Mat2& M, const IdealA& n) {
    if (!M.is_integral()) return false;
    RatFunc dt = M.det();
    if (dt.is_zero() || !dt.is_integral() || dt.num().degree() != 0) return false;
    auto e = integral_entries(M);
    return n.gen().divides(e[2]);
}

/**
 * Atkin-Lehner matrix (delta*a, b; nu*c, delta*d) with
 * delta^2*a*d - nu*c*b = zeta*delta, for an exact divisor d of n.
 */
struct ALMatrix {
    Mat2 matrix;
    IdealA d;
    IdealA n;
    Field::Elem zeta = 1;
};

/// Checks the Atkin-Lehner shape and returns zeta; throws otherwise.
inline Field::Elem al_zeta(const Mat2& W, const IdealA& d, const IdealA& n) {
    if (!d.exactly_divides(n)) throw Error("not an exact divisor");
    if (!W.is_integral()) throw Error("Atkin-Lehner matrix must be integral");
    auto e = integral_entries(W);
    const Poly& delta = d.gen();
    const Poly& nu = n.gen();
    if (!delta.divides(e[0]) || !delta.divides(e[3]) || !nu.divides(e[2]))
        throw Error("matrix does not have Atkin-Lehner shape");
    Poly dt = e[0] * e[3] - e[1] * e[2];
    auto [qt, r] = divmod(dt, delta);
    if (!r.is_zero() || qt.degree() != 0) throw Error("Atkin-Lehner determinant is not a unit times delta");
    return qt.lead();
}

/**
 * Deterministic representative with zeta = 1: the identity for d = (1),
 * the Fricke matrix (0 -1; nu 0) for d = n, and otherwise
 * (delta, -v; nu, delta*u) from u*delta + v*(nu/delta) = 1.
 */
inline ALMatrix al_representative(const IdealA& d, const IdealA& n) {
    if (!d.exactly_divides(n)) throw Error("d is not an exact divisor of n");
    const Field* F = n.field();
    if (d.is_unit()) return {Mat2::identity(F), d, n, 1};
    const Poly& delta = d.gen();
    const Poly& nu = n.gen();
    if (d == n) return {Mat2(Poly(F), -Poly::one(F), nu, Poly(F)), d, n, 1};
    Bezout bz = gcd_bezout(delta, nu / delta);
    return {Mat2(delta, -bz.v, nu, delta * bz.u), d, n, 1};
}

/// Random small polynomial of degree <= maxdeg.
template <class Rng>
Poly random_poly(const Field* F, int maxdeg, Rng& rng) {
    std::uniform_int_distribution<int> cd(0, F->q() - 1);
    std::vector<Field::Elem> c(maxdeg + 1);
    for (auto& x : c) x = static_cast<Field::Elem>(cd(rng));
    return Poly(F, std::move(c));
}

/// Random element of Gamma0(n) with determinant 1, as a product of
/// elementary matrices.
template <class Rng>
Mat2 random_gamma0(const IdealA& n, Rng& rng, int steps = 3, int maxdeg = 2) {
    const Field* F = n.field();
    Mat2 g = Mat2::identity(F);
    for (int i = 0; i < steps; ++i) {
        Poly x = random_poly(F, maxdeg, rng);
        Poly y = random_poly(F, maxdeg, rng);
        g = g * Mat2(Poly::one(F), x, Poly(F), Poly::one(F));
        g = g * Mat2(Poly::one(F), Poly(F), n.gen() * y, Poly::one(F));
    }
    return g;
}

/// Random element of GL2(A) (determinant a random unit).
template <class Rng>
Mat2 random_gl2(const Field* F, Rng& rng, int steps = 3, int maxdeg = 2) {
    Mat2 g = random_gamma0(IdealA::unit(F), rng, steps, maxdeg);
    std::uniform_int_distribution<int> ud(1, F->q() - 1);
    auto z = static_cast<Field::Elem>(ud(rng));
    return g * Mat2::diag(RatFunc(Poly::constant(F, z)), RatFunc::one(F));
}

/// Another valid representative of the same involution: gamma1 * W * gamma2
/// with gamma_i in Gamma0(n) of determinant 1 (zeta is preserved).
template <class Rng>
ALMatrix randomize_al(const ALMatrix& W, Rng& rng) {
    Mat2 M = random_gamma0(W.n, rng, 2, 1) * W.matrix * random_gamma0(W.n, rng, 2, 1);
    Field::Elem z = al_zeta(M, W.d, W.n);
    return {M, W.d, W.n, z};
}

/**
 * Representatives of Gamma0(mp) \ Gamma0(m): (1 0; pi*u 1) for u mod P and
 * (alpha -beta; pi P) with alpha*P + beta*pi = 1.
 */
inline std::vector<Mat2> coset_reps(const IdealA& m, const IdealA& p) {
    if (!p.is_prime()) throw Error("coset_reps needs a prime p");
    if (p.divides(m)) throw Error("coset_reps requires p not dividing m, hypothesis (pi,P)=1");
    const Field* F = m.field();
    const Poly& pi = m.gen();
    const Poly& P = p.gen();
    std::vector<Mat2> out;
    for (auto& u : polys_below_degree(F, P.degree()))
        out.emplace_back(Poly::one(F), Poly(F), pi * u, Poly::one(F));
    Bezout bz = gcd_bezout(P, pi);
    out.emplace_back(bz.u, -bz.v, pi, P);
    return out;
}

}  // namespace drinfeld

#endif
