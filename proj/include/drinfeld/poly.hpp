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

#ifndef DRINFELD_POLY_HPP
#define DRINFELD_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace drinfeld {

/// Valuations are integers or +infinity.
using Valuation = std::int64_t;
inline constexpr Valuation kInfinity = std::numeric_limits<Valuation>::max();

/**
 * Element of A = F_q[t], coefficients ascending with no trailing zeros.
 *
 * A default-constructed Poly is the zero polynomial with no field attached;
 * binary operations take the field from whichever operand carries one.
 */
class Poly {
   public:
    using Elem = Field::Elem;

    Poly() = default;
    explicit Poly(const Field* F) : F_(F) {}
    Poly(const Field* F, std::vector<Elem> c) : F_(F), c_(std::move(c)) { trim(); }

    static Poly constant(const Field* F, Elem c) { return Poly(F, std::vector<Elem>{c}); }
    static Poly from_int(const Field* F, long long n) { return constant(F, F->from_int(n)); }
    static Poly one(const Field* F) { return constant(F, 1); }
    static Poly monomial(const Field* F, Elem c, int deg) {
        std::vector<Elem> v(deg + 1, 0);
        v[deg] = c;
        return Poly(F, std::move(v));
    }
    static Poly t(const Field* F) { return monomial(F, 1, 1); }

    const Field* field() const noexcept { return F_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Elem lead() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }
    Elem coeff(int i) const noexcept { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Elem{0}; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }

    Poly operator-() const {
        Poly r(F_, c_);
        for (auto& x : r.c_) x = F_->neg(x);
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const Field* F = a.F_ ? a.F_ : b.F_;
        if (a.is_zero()) return Poly(F, b.c_);
        if (b.is_zero()) return Poly(F, a.c_);
        const auto& lo = a.c_.size() < b.c_.size() ? a.c_ : b.c_;
        const auto& hi = a.c_.size() < b.c_.size() ? b.c_ : a.c_;
        std::vector<Elem> r(hi);
        for (std::size_t i = 0; i < lo.size(); ++i) r[i] = F->add(r[i], lo[i]);
        return Poly(F, std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        const Field* F = a.F_ ? a.F_ : b.F_;
        if (b.is_zero()) return Poly(F, a.c_);
        std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = F->sub(r[i], b.c_[i]);
        return Poly(F, std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        const Field* F = a.F_ ? a.F_ : b.F_;
        if (a.is_zero() || b.is_zero()) return Poly(F);
        std::size_t n = a.c_.size(), m = b.c_.size();
        if (F->is_prime_field()) {
            std::vector<std::uint64_t> acc(n + m - 1, 0);
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t x = a.c_[i];
                if (x == 0) continue;
                for (std::size_t j = 0; j < m; ++j) acc[i + j] += x * b.c_[j];
            }
            std::vector<Elem> r(n + m - 1);
            auto p = static_cast<std::uint64_t>(F->p());
            for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<Elem>(acc[i] % p);
            return Poly(F, std::move(r));
        }
        std::vector<Elem> r(n + m - 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            Elem x = a.c_[i];
            if (x == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i + j] = F->add(r[i + j], F->mul(x, b.c_[j]));
        }
        return Poly(F, std::move(r));
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly scaled(Elem s) const {
        if (s == 0) return Poly(F_);
        Poly r(F_, c_);
        for (auto& x : r.c_) x = F_->mul(x, s);
        return r;
    }
    /// Multiplication by t^k.
    Poly shifted(int k) const {
        if (is_zero()) return *this;
        std::vector<Elem> r(k, 0);
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(F_, std::move(r));
    }

    /// Quotient and remainder; the divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw Error("polynomial division by zero");
        const Field* F = b.F_;
        if (a.degree() < b.degree()) return {Poly(F), Poly(F, a.c_)};
        std::vector<Elem> r = a.c_;
        std::vector<Elem> qt(a.c_.size() - b.c_.size() + 1, 0);
        Elem linv = F->inv(b.lead());
        int db = b.degree();
        for (int i = a.degree(); i >= db; --i) {
            Elem c = r[i];
            if (c == 0) continue;
            Elem f = F->mul(c, linv);
            qt[i - db] = f;
            for (int j = 0; j <= db; ++j) r[i - db + j] = F->sub(r[i - db + j], F->mul(f, b.c_[j]));
        }
        r.resize(db);
        return {Poly(F, std::move(qt)), Poly(F, std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) {
        if (a.degree() < b.degree() && !b.is_zero()) return a.F_ ? a : Poly(b.F_);
        return divmod(a, b).second;
    }
    bool divides(const Poly& a) const {
        if (is_zero()) return a.is_zero();
        return (a % *this).is_zero();
    }

    /// (unit, monic part) with *this = unit * monic part.
    std::pair<Elem, Poly> monic_normalize() const {
        if (is_zero()) throw Error("zero polynomial has no monic normalization");
        Elem l = lead();
        return {l, scaled(F_->inv(l))};
    }
    Poly monic() const { return monic_normalize().second; }

    Poly pow(unsigned long long n) const {
        Poly r = Poly::one(F_), b = *this;
        while (n > 0) {
            if (n & 1) r *= b;
            n >>= 1;
            if (n) b *= b;
        }
        return r;
    }

    Elem eval(Elem x) const {
        Elem r = 0;
        for (int i = degree(); i >= 0; --i) r = F_->add(F_->mul(r, x), c_[i]);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.c_ == b.c_; }
    /// Total order: by degree, then by coefficients from the top down.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        for (int i = a.degree(); i >= 0; --i)
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const Field* F_ = nullptr;
    std::vector<Elem> c_;
};

/// Monic gcd; throws on gcd(0, 0).
inline Poly gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw Error("zero gcd");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field() ? a.field() : b.field());
    return (a * b / gcd(a, b)).monic();
}

struct Bezout {
    Poly g, u, v;
};

/**
 * Extended Euclid: g = u*a + v*b with g monic. The output is made
 * deterministic by reducing u modulo b/g (so deg u < deg(b/g)), then
 * solving for v exactly.
 */
inline Bezout gcd_bezout(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error("zero gcd");
    const Field* F = a.field() ? a.field() : b.field();
    Poly r0 = a, r1 = b, s0 = Poly::one(F), s1(F);
    while (!r1.is_zero()) {
        auto [qt, r] = divmod(r0, r1);
        Poly s = s0 - qt * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    Field::Elem linv = F->inv(r0.lead());
    Poly g = r0.scaled(linv);
    Poly u = s0.scaled(linv);
    if (b.is_zero()) return {g, u, Poly(F)};
    Poly bg = b / g;
    u = u % bg;
    Poly v = (g - u * a) / b;
    return {g, u, v};
}

/// f^e mod m by square and multiply.
inline Poly powmod(Poly f, unsigned long long e, const Poly& m) {
    Poly r = Poly::one(m.field()) % m;
    f = f % m;
    while (e > 0) {
        if (e & 1) r = r * f % m;
        e >>= 1;
        if (e) f = f * f % m;
    }
    return r;
}

/// Ben-Or irreducibility test over F_q.
inline bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.degree() < 1) throw Error("irreducibility test needs a non-constant polynomial");
    const Field* F = f.field();
    if (f.degree() == 1) return true;
    Poly x = Poly::t(F);
    Poly h = x;
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = powmod(h, static_cast<unsigned long long>(F->q()), f);
        if (!gcd(h - x, f).is_one()) return false;
    }
    return true;
}

/// Order of the monic prime P in a nonzero polynomial; +infinity for zero.
inline Valuation valuation(const Poly& a, const Poly& P) {
    if (a.is_zero()) return kInfinity;
    Valuation v = 0;
    Poly x = a;
    while (true) {
        auto [qt, r] = divmod(x, P);
        if (!r.is_zero()) break;
        x = std::move(qt);
        ++v;
    }
    return v;
}

/// All polynomials of degree < d (including zero), in encoding order.
inline std::vector<Poly> polys_below_degree(const Field* F, int d) {
    std::vector<Poly> out;
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= F->q();
    out.reserve(total);
    for (long long code = 0; code < total; ++code) {
        std::vector<Field::Elem> c(d);
        long long v = code;
        for (int i = 0; i < d; ++i) {
            c[i] = static_cast<Field::Elem>(v % F->q());
            v /= F->q();
        }
        out.emplace_back(F, std::move(c));
    }
    return out;
}

/// All monic polynomials of exact degree d.
inline std::vector<Poly> monic_polys_of_degree(const Field* F, int d) {
    std::vector<Poly> out;
    for (auto& low : polys_below_degree(F, d)) out.push_back(low + Poly::monomial(F, 1, d));
    return out;
}

/// Monic divisors of a nonzero polynomial, sorted.
inline std::vector<Poly> monic_divisors(const Poly& n) {
    std::vector<Poly> out;
    for (int d = 0; d <= n.degree(); ++d)
        for (auto& c : monic_polys_of_degree(n.field(), d))
            if (c.divides(n)) out.push_back(c);
    return out;
}

}  // namespace drinfeld

#endif
