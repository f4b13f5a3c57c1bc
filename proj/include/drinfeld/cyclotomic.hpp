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

#ifndef DRINFELD_CYCLOTOMIC_HPP
#define DRINFELD_CYCLOTOMIC_HPP

#include <memory>
#include <utility>
#include <vector>

#include "carlitz.hpp"

namespace drinfeld {

/// K(lambda) = K[X] / phi_P(X) with phi_P(X) = C_P(X) / X, P monic prime.
class CycField {
   public:
    explicit CycField(const Poly& P) : P_(P), F_(P.field()) {
        if (P.degree() < 1 || !P.is_monic() || !is_irreducible(P)) throw Error("cyclotomic field needs a monic prime");
        auto cp = carlitz_poly(P);
        // phi = sum_j cp[j+1] X^j, monic of degree q^d - 1
        for (std::size_t j = 1; j < cp.size(); ++j) phi_.emplace_back(cp[j]);
        deg_ = static_cast<int>(phi_.size()) - 1;
    }

    const Poly& P() const noexcept { return P_; }
    const Field* field() const noexcept { return F_; }
    /// [K(lambda) : K] = q^d - 1
    int degree() const noexcept { return deg_; }
    const std::vector<RatFunc>& phi() const noexcept { return phi_; }

   private:
    Poly P_;
    const Field* F_;
    std::vector<RatFunc> phi_;
    int deg_ = 0;
};

/// Element sum_j c_j lambda^j, j < [K(lambda) : K].
class CycElem {
   public:
    CycElem() = default;
    explicit CycElem(std::shared_ptr<const CycField> ctx) : ctx_(std::move(ctx)), c_(ctx_->degree(), RatFunc(ctx_->field())) {}
    CycElem(std::shared_ptr<const CycField> ctx, const RatFunc& x) : CycElem(std::move(ctx)) { c_[0] = x; }

    static CycElem lambda(std::shared_ptr<const CycField> ctx) {
        CycElem e(ctx);
        if (ctx->degree() == 1)
            e.c_[0] = -ctx->phi()[0];  // lambda = -phi_0 when phi is linear
        else
            e.c_[1] = RatFunc::one(ctx->field());
        return e;
    }

    const std::shared_ptr<const CycField>& ctx() const noexcept { return ctx_; }
    const std::vector<RatFunc>& components() const noexcept { return c_; }
    RatFunc& component(int j) { return c_.at(j); }
    bool is_zero() const {
        for (auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    /// Lies in K: all lambda-components beyond the constant vanish.
    bool in_base() const {
        for (std::size_t j = 1; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }
    const RatFunc& base_part() const { return c_[0]; }

    friend CycElem operator+(const CycElem& a, const CycElem& b) {
        CycElem r = a;
        for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += b.c_[j];
        return r;
    }
    friend CycElem operator-(const CycElem& a, const CycElem& b) {
        CycElem r = a;
        for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] -= b.c_[j];
        return r;
    }
    friend CycElem operator*(const CycElem& a, const RatFunc& s) {
        CycElem r = a;
        for (auto& x : r.c_)
            if (!x.is_zero()) x *= s;
        return r;
    }
    friend CycElem operator*(const CycElem& a, const CycElem& b) {
        const int D = a.ctx_->degree();
        const RatFunc zero(a.ctx_->field());
        std::vector<RatFunc> prod(2 * D - 1, zero);
        for (int i = 0; i < D; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j < D; ++j)
                if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
        }
        // reduce with the monic phi
        const auto& phi = a.ctx_->phi();
        for (int e = 2 * D - 2; e >= D; --e) {
            if (prod[e].is_zero()) continue;
            RatFunc lead = prod[e];
            for (int j = 0; j < D; ++j)
                if (!phi[j].is_zero()) prod[e - D + j] -= lead * phi[j];
            prod[e] = zero;
        }
        CycElem r(a.ctx_);
        for (int j = 0; j < D; ++j) r.c_[j] = std::move(prod[j]);
        return r;
    }

    CycElem pow(long long n) const {
        CycElem r(ctx_, RatFunc::one(ctx_->field())), b = *this;
        while (n > 0) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const CycElem& a, const CycElem& b) { return a.c_ == b.c_; }

   private:
    std::shared_ptr<const CycField> ctx_;
    std::vector<RatFunc> c_;
};

/// C_a(lambda) for a in A.
inline CycElem carlitz_torsion(const std::shared_ptr<const CycField>& ctx, const Poly& a) {
    CycElem out(ctx);
    if (a.is_zero()) return out;
    auto c = carlitz_coeffs(a);
    CycElem lp = CycElem::lambda(ctx);  // lambda^{q^i}
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) lp = lp.pow(ctx->field()->q());
        if (!c[i].is_zero()) out = out + lp * RatFunc(c[i]);
    }
    return out;
}

}  // namespace drinfeld

#endif
