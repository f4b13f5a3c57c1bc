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

#ifndef DRINFELD_MAT2_HPP
#define DRINFELD_MAT2_HPP

#include <array>
#include <string>
#include <utility>

#include "literal.hpp"
#include "ratfunc.hpp"

namespace drinfeld {

/// 2x2 matrix over K, row-major (a b; c d).
class Mat2 {
   public:
    Mat2() = default;
    Mat2(RatFunc a, RatFunc b, RatFunc c, RatFunc d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
    Mat2(const Poly& a, const Poly& b, const Poly& c, const Poly& d)
        : e_{RatFunc(a), RatFunc(b), RatFunc(c), RatFunc(d)} {}

    static Mat2 identity(const Field* F) {
        return Mat2(RatFunc::one(F), RatFunc(F), RatFunc(F), RatFunc::one(F));
    }
    static Mat2 scalar(const RatFunc& s) { return Mat2(s, RatFunc(s.field()), RatFunc(s.field()), s); }
    static Mat2 diag(const RatFunc& x, const RatFunc& y) { return Mat2(x, RatFunc(x.field()), RatFunc(x.field()), y); }

    const RatFunc& a() const noexcept { return e_[0]; }
    const RatFunc& b() const noexcept { return e_[1]; }
    const RatFunc& c() const noexcept { return e_[2]; }
    const RatFunc& d() const noexcept { return e_[3]; }
    const RatFunc& operator[](int i) const noexcept { return e_[i]; }
    const Field* field() const noexcept {
        for (auto& x : e_)
            if (x.field()) return x.field();
        return nullptr;
    }

    RatFunc det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
    bool is_integral() const {
        for (auto& x : e_)
            if (!x.is_integral()) return false;
        return true;
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
                    x.c() * y.b() + x.d() * y.d());
    }
    Mat2 scaled(const RatFunc& s) const { return Mat2(e_[0] * s, e_[1] * s, e_[2] * s, e_[3] * s); }
    Mat2 inverse() const {
        RatFunc dt = det();
        if (dt.is_zero()) throw Error("singular matrix");
        RatFunc di = dt.inverse();
        return Mat2(e_[3] * di, -e_[1] * di, -e_[2] * di, e_[0] * di);
    }
    /// Adjugate (d -b; -c a): inverse times det, integral when the input is.
    Mat2 adjugate() const { return Mat2(e_[3], -e_[1], -e_[2], e_[0]); }

    friend bool operator==(const Mat2& x, const Mat2& y) noexcept { return x.e_ == y.e_; }

    std::string to_string() const {
        return "(" + format_ratfunc(e_[0]) + ", " + format_ratfunc(e_[1]) + "; " + format_ratfunc(e_[2]) + ", " +
               format_ratfunc(e_[3]) + ")";
    }

   private:
    std::array<RatFunc, 4> e_;
};

/// Integral entries as polynomials; throws if any entry has a denominator.
inline std::array<Poly, 4> integral_entries(const Mat2& M) {
    std::array<Poly, 4> out;
    const Field* F = M.field();
    for (int i = 0; i < 4; ++i) {
        if (!M[i].is_integral()) throw Error("matrix is not integral");
        out[i] = M[i].num().field() ? M[i].num() : Poly(F);
    }
    return out;
}

struct PrimitiveForm {
    Mat2 primitive;  // integral, content 1, first nonzero entry monic
    RatFunc scale;   // M = scale * primitive
};

/// M = s * M0 with M0 integral of content 1 and first nonzero entry
/// (row-major) monic. M0 is unique.
inline PrimitiveForm primitive_form(const Mat2& M) {
    const Field* F = M.field();
    Poly L = Poly::one(F);
    for (int i = 0; i < 4; ++i)
        if (!M[i].is_zero()) L = lcm(L, M[i].den());
    std::array<Poly, 4> n;
    Poly content(F);
    for (int i = 0; i < 4; ++i) {
        n[i] = M[i].is_zero() ? Poly(F) : M[i].num() * (L / M[i].den());
        if (!n[i].is_zero()) content = content.is_zero() ? n[i].monic() : gcd(content, n[i]);
    }
    if (content.is_zero()) throw Error("zero matrix has no primitive form");
    Field::Elem unit = 0;
    for (int i = 0; i < 4; ++i) {
        n[i] = n[i] / content;
        if (unit == 0 && !n[i].is_zero()) unit = n[i].lead();
    }
    Field::Elem uinv = F->inv(unit);
    for (auto& x : n) x = x.scaled(uinv);
    RatFunc s = RatFunc(content.scaled(unit), L);
    return {Mat2(n[0], n[1], n[2], n[3]), s};
}

struct HermiteForm {
    Mat2 H;    // (g b; 0 d), g and d monic, deg b < deg d
    Mat2 eps;  // in GL2(A), eps * M = H
};

/**
 * Row-style Hermite normal form of a nonsingular integral matrix: the
 * unique upper-triangular representative of the left GL2(A)-coset of M.
 */
inline HermiteForm hnf(const Mat2& M) {
    auto [a, b, c, d] = integral_entries(M);
    const Field* F = M.field();
    if ((a * d - b * c).is_zero()) throw Error("singular matrix has no Hermite form");
    // clear the first column with a determinant-one Bezout matrix
    Bezout bz = gcd_bezout(a, c);
    Poly e00 = bz.u, e01 = bz.v, e10 = -(c / bz.g), e11 = a / bz.g;
    Poly h00 = bz.g;
    Poly h01 = bz.u * b + bz.v * d;
    Poly h11 = e10 * b + e11 * d;
    // bottom-right monic
    Field::Elem w = F->inv(h11.lead());
    h11 = h11.scaled(w);
    e10 = e10.scaled(w);
    e11 = e11.scaled(w);
    // reduce top-right modulo bottom-right
    auto [qt, rem] = divmod(h01, h11);
    e00 = e00 - qt * e10;
    e01 = e01 - qt * e11;
    h01 = rem;
    return {Mat2(h00, h01, Poly(F), h11), Mat2(e00, e01, e10, e11)};
}

}  // namespace drinfeld

#endif
