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

#ifndef DRINFELD_CUSPS_HPP
#define DRINFELD_CUSPS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cosets.hpp"

namespace drinfeld {

/**
 * Cusp label (x : y) with x, y monic, y | nu and (x, nu) = 1. The label
 * stands for the point x / (nu/y) of P^1(K): y = 1 is infinity and y = nu
 * is zero. x is the least monic polynomial in its class modulo
 * (y, nu/y) up to units.
 */
struct Cusp {
    Poly x, y;
    friend bool operator==(const Cusp&, const Cusp&) = default;
    friend auto operator<=>(const Cusp&, const Cusp&) = default;

    std::string to_string() const { return "(" + format_poly(x) + " : " + format_poly(y) + ")"; }

    /// Homogeneous coordinates [a : c] of the point this label stands for.
    std::pair<Poly, Poly> point(const IdealA& n) const { return {x, n.gen() / y}; }
};

namespace detail {

// monic polynomials of degree <= maxdeg, in increasing order
inline std::vector<Poly> monic_up_to(const Field* F, int maxdeg) {
    std::vector<Poly> out;
    for (int d = 0; d <= maxdeg; ++d)
        for (auto& f : monic_polys_of_degree(F, d)) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

inline Poly least_x(const Poly& r, const Poly& g, const IdealA& n) {
    const Field* F = n.field();
    for (auto& x : monic_up_to(F, n.degree() + g.degree())) {
        if (!gcd(x, n.gen()).is_one()) continue;
        if (g.is_one()) return x;
        for (auto z : F->units())
            if (((x - r.scaled(z)) % g).is_zero()) return x;
    }
    throw Error("no admissible cusp numerator");
}

/// [a : c] coprime integral coordinates of a point given by (x, y) in K.
inline std::pair<Poly, Poly> integral_point(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero() && y.is_zero()) throw Error("(0, 0) is not a point of P^1");
    const Field* F = x.field() ? x.field() : y.field();
    Poly L = lcm(x.den(), y.den());
    Poly a = x.is_zero() ? Poly(F) : x.num() * (L / x.den());
    Poly c = y.is_zero() ? Poly(F) : y.num() * (L / y.den());
    Poly g = a.is_zero() ? c.monic() : (c.is_zero() ? a.monic() : gcd(a, c));
    return {a / g, c / g};
}

/// Matrix in GL2(A) with first column (a, c), gcd(a, c) = 1.
inline Mat2 complete(const Poly& a, const Poly& c) {
    const Field* F = a.field() ? a.field() : c.field();
    Bezout bz = gcd_bezout(a, c);  // u a + v c = g, a unit
    Field::Elem gi = F->inv(bz.g.lead());
    return Mat2(a, -bz.v.scaled(gi), c, bz.u.scaled(gi));
}

}  // namespace detail

/// Gamma0(n)-equivalence of two points of P^1(K) by exhaustive search.
inline bool cusps_equivalent(const std::pair<Poly, Poly>& p1, const std::pair<Poly, Poly>& p2, const IdealA& n) {
    const Poly& nu = n.gen();
    if (n.is_unit()) return true;
    Mat2 g1 = detail::complete(p1.first, p1.second);
    Mat2 g2 = detail::complete(p2.first, p2.second);
    auto e1 = integral_entries(g1.adjugate());  // g1^{-1} up to a unit
    auto e2 = integral_entries(g2);
    const Field* F = n.field();
    // lower-left of g2 (z h; 0 1) adj(g1) = w (z d1 - c h) - c d2 with g2 = (x b2; w d2)
    const Poly& w = e2[2];
    const Poly& d2 = e2[3];
    const Poly& d1 = e1[0];
    const Poly c = -e1[2];
    for (auto z : F->units())
        for (auto& h : polys_below_degree(F, nu.degree())) {
            Poly ll = (w * (d1.scaled(z) - c * h) - c * d2) % nu;
            if (ll.is_zero()) return true;
        }
    return false;
}

inline std::vector<Cusp> enumerate_cusps(const IdealA& n) {
    const Field* F = n.field();
    std::vector<Cusp> out;
    for (auto& y : monic_divisors(n.gen())) {
        Poly g = gcd(y, n.gen() / y);
        std::vector<Poly> xs;
        for (auto& r : polys_below_degree(F, g.degree())) {
            if (!g.is_one() && !gcd(r.is_zero() ? g : r, g).is_one()) continue;
            if (g.is_one() && !r.is_zero()) continue;
            Poly x = detail::least_x(r, g, n);
            if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
        }
        for (auto& x : xs) out.push_back({x, y});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Denominator label of a point [a : c] with gcd(a, c) = 1.
inline Poly cusp_label_y(const Poly& c, const IdealA& n) {
    Poly g = c.is_zero() ? n.gen() : gcd(c, n.gen());
    return n.gen() / g;
}

inline Cusp cusp_canonical_point(const Poly& a, const Poly& c, const IdealA& n) {
    Poly y = cusp_label_y(c, n);
    for (auto& cu : enumerate_cusps(n)) {
        if (!(cu.y == y)) continue;
        if (cusps_equivalent({a, c}, cu.point(n), n)) return cu;
    }
    throw InconsistencyError("point has no equivalent cusp label");
}

/// Canonical label of the point [x : y] of P^1(K).
inline Cusp cusp_canonical(const RatFunc& x, const RatFunc& y, const IdealA& n) {
    auto [a, c] = detail::integral_point(x, y);
    return cusp_canonical_point(a, c, n);
}

inline Cusp al_on_cusp(const ALMatrix& W, const Cusp& cu) {
    auto [a, c] = cu.point(W.n);
    auto e = integral_entries(W.matrix);
    return cusp_canonical(RatFunc(e[0] * a + e[1] * c), RatFunc(e[2] * a + e[3] * c), W.n);
}

inline Cusp al_on_cusp(const IdealA& d, const IdealA& n, const Cusp& cu) {
    return al_on_cusp(al_representative(d, n), cu);
}

/// y' = (nu2 / (y, nu2)) * (y, nu1) for n = n1 n2 with n2 = d.
inline Poly al_cusp_denominator(const IdealA& d, const IdealA& n, const Poly& y) {
    const Poly& nu2 = d.gen();
    Poly nu1 = n.gen() / nu2;
    return (nu2 / gcd(y, nu2)) * gcd(y, nu1);
}

/// Permutation of the cusp list induced by W: perm[i] = index of W(c_i).
inline std::vector<int> al_permutation(const ALMatrix& W, const std::vector<Cusp>& cusps) {
    std::vector<int> perm;
    for (auto& c : cusps) {
        Cusp img = al_on_cusp(W, c);
        auto it = std::find(cusps.begin(), cusps.end(), img);
        if (it == cusps.end()) throw InconsistencyError("Atkin-Lehner image is not a listed cusp");
        perm.push_back(static_cast<int>(it - cusps.begin()));
    }
    return perm;
}

/// Cycle notation with 1-based indices, fixed points omitted; "()" for the identity.
inline std::string cycle_notation(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == static_cast<int>(i)) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            out += (first ? "" : " ") + std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(perm[j]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

}  // namespace drinfeld

#endif
