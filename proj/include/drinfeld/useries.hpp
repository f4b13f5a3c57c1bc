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

#ifndef DRINFELD_USERIES_HPP
#define DRINFELD_USERIES_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "carlitz.hpp"
#include "literal.hpp"

namespace drinfeld {

/**
 * Truncated power series sum_{i < prec} c_i x^i over a coefficient ring R
 * (RatFunc for K, CycElem for the torsion extension). R needs +, -, *,
 * is_zero() and multiplication by RatFunc.
 *
 * pi_grade is the formal degree in the Carlitz period: the variable u has
 * grade -1 and torsion constants +1; the series of a form in the Carlitz
 * normalization is homogeneous of grade 0.
 */
template <class R>
class Series {
   public:
    Series() = default;
    Series(R zero, int prec) : zero_(std::move(zero)), c_(std::max(prec, 0), zero_), prec_(std::max(prec, 0)) {}
    Series(R zero, std::vector<R> coeffs, int prec) : zero_(std::move(zero)), c_(std::move(coeffs)), prec_(prec) {
        c_.resize(std::max(prec, 0), zero_);
    }

    static Series constant(const R& zero, const R& c, int prec) {
        Series s(zero, prec);
        if (prec > 0) s.c_[0] = c;
        return s;
    }
    /// x^n as a series known to precision prec.
    static Series monomial(const R& zero, const R& c, int n, int prec) {
        Series s(zero, prec);
        if (n < prec) s.c_[n] = c;
        return s;
    }

    int prec() const noexcept { return prec_; }
    int pi_grade() const noexcept { return grade_; }
    void set_pi_grade(int g) noexcept { grade_ = g; }
    const R& zero() const noexcept { return zero_; }
    const R& operator[](int i) const { return c_.at(i); }
    R& coeff(int i) { return c_.at(i); }
    const std::vector<R>& coeffs() const noexcept { return c_; }

    /// Lowest exponent with nonzero coefficient; prec if none.
    int order() const {
        for (int i = 0; i < prec_; ++i)
            if (!c_[i].is_zero()) return i;
        return prec_;
    }
    bool is_zero() const { return order() == prec_; }

    Series truncated(int n) const {
        Series s = *this;
        if (n < prec_) {
            s.c_.resize(std::max(n, 0), zero_);
            s.prec_ = std::max(n, 0);
        }
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        check_grades(a, b);
        int p = std::min(a.prec_, b.prec_);
        Series s(a.zero_, p);
        for (int i = 0; i < p; ++i) s.c_[i] = a.c_[i] + b.c_[i];
        s.grade_ = a.grade_;
        return s;
    }
    friend Series operator-(const Series& a, const Series& b) {
        check_grades(a, b);
        int p = std::min(a.prec_, b.prec_);
        Series s(a.zero_, p);
        for (int i = 0; i < p; ++i) s.c_[i] = a.c_[i] - b.c_[i];
        s.grade_ = a.grade_;
        return s;
    }
    Series operator-() const {
        Series s = *this;
        for (auto& x : s.c_) x = zero_ - x;
        return s;
    }

    /// Precision min(prec_a + ord_b, prec_b + ord_a).
    friend Series operator*(const Series& a, const Series& b) {
        int oa = a.order(), ob = b.order();
        int p = std::min(a.prec_ + ob, b.prec_ + oa);
        Series s(a.zero_, p);
        s.grade_ = a.grade_ + b.grade_;
        for (int i = oa; i < a.prec_ && i < p; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = ob; j < b.prec_ && i + j < p; ++j) {
                if (b.c_[j].is_zero()) continue;
                s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return s;
    }
    template <class S>
    Series scaled(const S& k) const {
        Series s = *this;
        for (auto& x : s.c_)
            if (!x.is_zero()) x = x * k;
        return s;
    }

    /// Shifts up by n: multiplies by x^n.
    Series shifted(int n) const {
        Series s(zero_, prec_ + n);
        for (int i = 0; i < prec_; ++i) s.c_[i + n] = c_[i];
        s.grade_ = grade_;
        return s;
    }

    /// 1 / this for a series with invertible constant term; inv0 = 1/c_0.
    template <class Inv>
    Series inverse(Inv inv0) const {
        if (prec_ == 0) return *this;
        if (c_[0].is_zero()) throw Error("series inverse needs a nonzero constant term");
        R i0 = inv0(c_[0]);
        Series s(zero_, prec_);
        s.grade_ = -grade_;
        s.c_[0] = i0;
        for (int n = 1; n < prec_; ++n) {
            R acc = zero_;
            for (int j = 1; j <= n; ++j)
                if (!c_[j].is_zero()) acc = acc + c_[j] * s.c_[n - j];
            s.c_[n] = zero_ - acc * i0;
        }
        return s;
    }

    /// this(g) for g of positive order, precision min(prec * ord g, prec_g).
    Series compose(const Series& g) const {
        int og = g.order();
        if (og == 0) throw Error("substitution needs a series without constant term");
        if (og >= g.prec_) {
            // g is zero to its precision
            return constant(zero_, prec_ > 0 ? c_[0] : zero_, g.prec_);
        }
        long long pl = static_cast<long long>(prec_) * og;
        int p = static_cast<int>(std::min<long long>(pl, g.prec_));
        bool only_const = true;
        for (int i = 1; i < prec_; ++i)
            if (!c_[i].is_zero()) only_const = false;
        if (only_const) p = static_cast<int>(std::min<long long>(pl, 1LL << 30));
        Series gt = g.truncated(p);
        // Horner from the top term that can contribute
        int top = std::min(prec_ - 1, (p - 1) / og);
        Series acc(zero_, p);
        for (int i = top; i >= 0; --i) {
            acc = acc * gt;
            acc = acc.truncated_to(p);
            if (!c_[i].is_zero()) acc.c_[0] = acc.c_[0] + c_[i];
        }
        acc.grade_ = grade_;
        return acc.truncated_to(p);
    }

    /// (sum c_i x^i)^p = sum c_i^p x^{ip} in characteristic p; pw raises a coefficient.
    template <class Pow>
    Series frobenius(int p, Pow pw) const {
        long long np = static_cast<long long>(prec_) * p;
        Series s(zero_, static_cast<int>(np));
        for (int i = 0; i < prec_; ++i)
            if (!c_[i].is_zero()) s.c_[i * p] = pw(c_[i]);
        s.grade_ = grade_ * p;
        return s;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.prec_ == b.prec_ && a.c_ == b.c_; }

   private:
    static void check_grades(const Series& a, const Series& b) {
        if (a.grade_ != b.grade_) throw InconsistencyError("adding series of different period grades");
    }
    // keep the first p coefficients, padding with zeros
    Series truncated_to(int p) const {
        Series s = *this;
        s.c_.resize(p, zero_);
        s.prec_ = p;
        return s;
    }

    R zero_;
    std::vector<R> c_;
    int prec_ = 0;
    int grade_ = 0;
};

using USeries = Series<RatFunc>;

inline USeries useries_zero(const Field* F, int prec) { return USeries(RatFunc(F), prec); }
inline USeries useries_one(const Field* F, int prec) {
    return USeries::constant(RatFunc(F), RatFunc::one(F), prec);
}
inline USeries useries_u(const Field* F, int prec) {
    return USeries::monomial(RatFunc(F), RatFunc::one(F), 1, prec);
}
inline USeries useries_from(const Field* F, const std::vector<RatFunc>& c, int prec) {
    return USeries(RatFunc(F), c, prec);
}

inline USeries series_inverse(const USeries& s) {
    return s.inverse([](const RatFunc& x) { return x.inverse(); });
}

inline USeries series_pow(const USeries& s, int n) {
    const Field* F = s.zero().field();
    USeries r = useries_one(F, s.prec());
    for (int i = 0; i < n; ++i) r = r * s;
    return r;
}

inline USeries series_frobenius(const USeries& s, int times = 1) {
    const Field* F = s.zero().field();
    USeries r = s;
    for (int i = 0; i < times; ++i) r = r.frobenius(F->p(), [&](const RatFunc& x) { return x.pow(F->p()); });
    return r;
}

/// u(az) = 1 / C_a(1/u) as a series in u with coefficients in A.
inline USeries u_of_az(const Poly& a, int N) {
    if (a.is_zero()) throw Error("u(az) needs a nonzero a");
    const Field* F = a.field();
    auto cp = carlitz_poly(a);  // C_a(X) = sum_j cp[j] X^j
    const int Q = static_cast<int>(cp.size()) - 1;
    if (N <= Q) return useries_zero(F, N);
    // u^Q * C_a(1/u) = sum_j cp[j] u^{Q-j}, constant term cp[Q] = lead(a)
    USeries den = useries_zero(F, N - Q);
    for (int j = 0; j <= Q; ++j)
        if (Q - j < N - Q && !cp[j].is_zero()) den.coeff(Q - j) = RatFunc(cp[j]);
    return series_inverse(den).shifted(Q);
}

/// Minimum coefficient valuation at P; kInfinity for the zero series.
inline Valuation series_vp(const USeries& f, const Poly& P) {
    if (P.degree() < 1 || !is_irreducible(P)) throw Error("valuation requires a prime");
    Poly Pm = P.monic();
    Valuation v = kInfinity;
    for (auto& c : f.coeffs())
        if (!c.is_zero()) v = std::min(v, valuation(c, Pm));
    return v;
}

/// v_P(f - g) >= r, compared to the common precision.
inline bool congruent_mod(const USeries& f, const USeries& g, const Poly& P, long long r) {
    Valuation v = series_vp(f - g, P);
    return v == kInfinity || v >= r;
}

inline bool is_integral(const USeries& f) {
    for (auto& c : f.coeffs())
        if (!c.is_integral()) return false;
    return true;
}

inline std::string format_series(const USeries& f, const std::string& var = "u") {
    std::string out;
    for (int i = 0; i < f.prec(); ++i) {
        const RatFunc& c = f[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = format_ratfunc(c);
        if (cs.find_first_of("+-") != std::string::npos && i > 0) cs = "(" + cs + ")";
        if (i == 0)
            out += cs;
        else
            out += (c.is_one() ? "" : cs + "*") + var + (i == 1 ? "" : "^" + std::to_string(i));
    }
    return (out.empty() ? "0" : out) + " + O(" + var + "^" + std::to_string(f.prec()) + ")";
}

}  // namespace drinfeld

#endif
