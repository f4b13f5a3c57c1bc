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

#ifndef DRINFELD_FIELD_HPP
#define DRINFELD_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace drinfeld {

/**
 * The finite field F_q, q = p^e <= 256.
 *
 * Elements are encoded as integers 0..q-1 whose base-p digits are the
 * coefficients of a polynomial in the generator x modulo the F_p-modulus.
 * Arithmetic goes through precomputed tables. Fields are interned: get()
 * returns a pointer that stays valid for the life of the process, so
 * fields compare by address.
 */
class Field {
   public:
    using Elem = std::uint8_t;

    static const Field* prime(int p) { return get(p, 1, {}); }

    /// `modulus` holds ascending F_p-coefficients of a monic degree-e
    /// irreducible polynomial; it must be empty when e == 1.
    static const Field* get(int p, int e, std::vector<int> modulus) {
        static std::mutex mu;
        static std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<Field>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_tuple(p, e, modulus);
        auto it = registry.find(key);
        if (it != registry.end()) return it->second.get();
        auto f = std::unique_ptr<Field>(new Field(p, e, std::move(modulus)));
        const Field* out = f.get();
        registry.emplace(std::move(key), std::move(f));
        return out;
    }

    int p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    int q() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return e_ == 1; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem inv(Elem a) const {
        if (a == 0) throw Error("division by zero in F_q");
        return inv_[a];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long n) const {
        if (n < 0) return pow(inv(a), -n);
        Elem r = 1;
        while (n > 0) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }
    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_int(long long n) const noexcept {
        long long r = n % p_;
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }
    /// The generator x of a non-prime field.
    Elem generator() const {
        if (e_ == 1) throw Error("prime field has no generator symbol");
        return static_cast<Elem>(p_);
    }
    /// The nonzero elements, in encoding order.
    std::vector<Elem> units() const {
        std::vector<Elem> out;
        for (int i = 1; i < q_; ++i) out.push_back(static_cast<Elem>(i));
        return out;
    }
    /// base-p digits of an element, ascending in x.
    std::vector<int> digits(Elem a) const {
        std::vector<int> out(e_, 0);
        int v = a;
        for (int i = 0; i < e_; ++i) {
            out[i] = v % p_;
            v /= p_;
        }
        return out;
    }

   private:
    Field(int p, int e, std::vector<int> modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
        if (p < 2 || !is_prime_int(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
        if (e < 1) throw Error("field degree must be positive");
        q_ = 1;
        for (int i = 0; i < e; ++i) {
            q_ *= p;
            if (q_ > 256) throw Error("field size above 256 is not supported");
        }
        if (e == 1) {
            if (!modulus_.empty()) throw Error("prime field takes no modulus");
        } else {
            if (static_cast<int>(modulus_.size()) != e + 1 || modulus_.back() % p != 1)
                throw Error("modulus must be monic of degree e");
            for (auto& c : modulus_) c = ((c % p) + p) % p;
            if (!modulus_irreducible()) throw Error("field modulus is reducible over F_p");
        }
        build_tables();
    }

    static bool is_prime_int(int n) {
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return n >= 2;
    }

    // polynomials over F_p as digit vectors; used only while building tables
    std::vector<int> mulmod_fp(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> r(2 * e_, 0);
        for (int i = 0; i < e_; ++i)
            for (int j = 0; j < e_; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
        for (int i = 2 * e_ - 1; i >= e_; --i) {
            int c = r[i];
            if (c == 0) continue;
            for (int j = 0; j <= e_; ++j) r[i - e_ + j] = ((r[i - e_ + j] - c * modulus_[j]) % p_ + p_) % p_;
        }
        r.resize(e_);
        return r;
    }

    bool modulus_irreducible() const {
        // no monic factor of degree 1..e/2 (brute force; p^e <= 256)
        for (int deg = 1; 2 * deg <= e_; ++deg) {
            int count = 1;
            for (int i = 0; i < deg; ++i) count *= p_;
            for (int code = 0; code < count; ++code) {
                std::vector<int> div(deg + 1, 0);
                int v = code;
                for (int i = 0; i < deg; ++i) {
                    div[i] = v % p_;
                    v /= p_;
                }
                div[deg] = 1;
                std::vector<int> r = modulus_;
                for (int i = e_; i >= deg; --i) {
                    int c = r[i];
                    if (c == 0) continue;
                    for (int j = 0; j <= deg; ++j) r[i - deg + j] = ((r[i - deg + j] - c * div[j]) % p_ + p_) % p_;
                }
                bool zero = true;
                for (int i = 0; i < deg; ++i) zero = zero && r[i] == 0;
                if (zero) return false;
            }
        }
        return true;
    }

    Elem encode(const std::vector<int>& d) const {
        int v = 0;
        for (int i = e_ - 1; i >= 0; --i) v = v * p_ + d[i];
        return static_cast<Elem>(v);
    }

    void build_tables() {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            auto da = digits(static_cast<Elem>(a));
            std::vector<int> dn(e_);
            for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
            neg_[a] = encode(dn);
            for (int b = 0; b < q_; ++b) {
                auto db = digits(static_cast<Elem>(b));
                std::vector<int> ds(e_);
                for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = encode(ds);
                mul_[a * q_ + b] = e_ == 1 ? static_cast<Elem>((a * b) % p_) : encode(mulmod_fp(da, db));
            }
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
    }

    int p_;
    int e_;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

}  // namespace drinfeld

#endif
