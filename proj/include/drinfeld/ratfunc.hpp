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

#ifndef DRINFELD_RATFUNC_HPP
#define DRINFELD_RATFUNC_HPP

#include <utility>
#include <vector>

#include "poly.hpp"

namespace drinfeld {

/**
 * Element of K = F_q(t), kept in canonical form: gcd(num, den) = 1 and den
 * monic. Equality is therefore componentwise. Integral operands take a
 * fast path that skips the gcd.
 */
class RatFunc {
   public:
    RatFunc() = default;
    explicit RatFunc(const Field* F) : num_(F), den_(Poly::one(F)) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}  // NOLINT: A embeds in K
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc from_int(const Field* F, long long n) { return RatFunc(Poly::from_int(F, n)); }
    static RatFunc one(const Field* F) { return RatFunc(Poly::one(F)); }

    const Field* field() const noexcept { return num_.field() ? num_.field() : den_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_integral() const noexcept { return den_.is_zero() || den_.is_one(); }

    RatFunc operator-() const { return raw(-num_, den_); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b.with_field(a.field());
        if (b.is_zero()) return a.with_field(b.field());
        if (a.is_integral() && b.is_integral()) return RatFunc(a.num_ + b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        const Field* F = a.field() ? a.field() : b.field();
        if (a.is_zero() || b.is_zero()) return RatFunc(F);
        if (a.is_integral() && b.is_integral()) return RatFunc(a.num_ * b.num_);
        // cross-cancel to keep intermediate degrees small
        Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        return raw_normalized_den((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    RatFunc inverse() const {
        if (is_zero()) throw Error("inverse of zero in K");
        return RatFunc(den_, num_);
    }
    RatFunc pow(long long n) const {
        if (n < 0) return inverse().pow(-n);
        return raw(num_.pow(static_cast<unsigned long long>(n)), den_.pow(static_cast<unsigned long long>(n)));
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
        return a.num_ == b.num_ && (a.num_.is_zero() || a.den_ == b.den_);
    }
    friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) noexcept {
        if (auto c = a.num_ <=> b.num_; c != 0) return c;
        return a.den_ <=> b.den_;
    }

   private:
    static RatFunc raw(Poly n, Poly d) {
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    // coprime inputs; only the leading unit of the denominator moves
    static RatFunc raw_normalized_den(Poly n, Poly d) {
        auto [u, dm] = d.monic_normalize();
        return raw(n.scaled(d.field()->inv(u)), std::move(dm));
    }
    RatFunc with_field(const Field* F) const {
        if (field() || !F) return *this;
        return RatFunc(F);
    }
    void normalize() {
        if (den_.is_zero()) throw Error("zero denominator");
        const Field* F = den_.field();
        if (num_.is_zero()) {
            num_ = Poly(F);
            den_ = Poly::one(F);
            return;
        }
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        auto [u, dm] = den_.monic_normalize();
        if (u != 1) num_ = num_.scaled(F->inv(u));
        den_ = std::move(dm);
    }

    Poly num_;
    Poly den_;
};

/// p-adic valuation of x at the prime with monic generator P.
inline Valuation valuation(const RatFunc& x, const Poly& P) {
    if (x.is_zero()) return kInfinity;
    return valuation(x.num(), P) - valuation(x.den(), P);
}

/// As valuation(), but checks that P generates a prime ideal.
inline Valuation vp_rational(const RatFunc& x, const Poly& P) {
    if (P.is_zero() || P.degree() < 1 || !is_irreducible(P)) throw Error("valuation requires a prime ideal");
    return valuation(x, P.monic());
}

/**
 * Nonzero ideal of A, stored as its monic generator.
 */
class IdealA {
   public:
    IdealA() = default;
    explicit IdealA(const Poly& g) {
        if (g.is_zero()) throw Error("the zero ideal is excluded");
        gen_ = g.monic();
    }
    static IdealA unit(const Field* F) { return IdealA(Poly::one(F)); }

    const Poly& gen() const noexcept { return gen_; }
    const Field* field() const noexcept { return gen_.field(); }
    int degree() const noexcept { return gen_.degree(); }
    bool is_unit() const noexcept { return gen_.is_one(); }
    bool is_prime() const { return gen_.degree() >= 1 && is_irreducible(gen_); }

    /// this | other
    bool divides(const IdealA& other) const { return gen_.divides(other.gen_); }
    /// this || other: divides, with gcd(this, other/this) = 1
    bool exactly_divides(const IdealA& other) const {
        if (!divides(other)) return false;
        return gcd(gen_, other.gen_ / gen_).is_one();
    }
    IdealA operator*(const IdealA& o) const { return IdealA(gen_ * o.gen_); }
    IdealA quotient(const IdealA& d) const {
        if (!d.divides(*this)) throw Error("ideal quotient by a non-divisor");
        return IdealA(gen_ / d.gen_);
    }
    friend IdealA gcd(const IdealA& a, const IdealA& b) { return IdealA(gcd(a.gen_, b.gen_)); }

    std::vector<IdealA> divisors() const {
        std::vector<IdealA> out;
        for (auto& d : monic_divisors(gen_)) out.emplace_back(d);
        return out;
    }
    std::vector<IdealA> exact_divisors() const {
        std::vector<IdealA> out;
        for (auto& d : divisors())
            if (d.exactly_divides(*this)) out.push_back(d);
        return out;
    }
    /// The prime-power exact divisors d_i^{e_i} of the generator.
    std::vector<IdealA> prime_power_parts() const {
        std::vector<IdealA> ex = exact_divisors(), out;
        for (auto& d : ex) {
            if (d.is_unit()) continue;
            bool minimal = true;
            for (auto& e : ex)
                if (!e.is_unit() && e.degree() < d.degree() && e.divides(d)) minimal = false;
            if (minimal) out.push_back(d);
        }
        return out;
    }

    friend bool operator==(const IdealA& a, const IdealA& b) noexcept { return a.gen_ == b.gen_; }
    friend auto operator<=>(const IdealA& a, const IdealA& b) noexcept { return a.gen_ <=> b.gen_; }

   private:
    Poly gen_;
};

}  // namespace drinfeld

#endif
