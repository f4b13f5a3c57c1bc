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

#ifndef DRINFELD_LITERAL_HPP
#define DRINFELD_LITERAL_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "ratfunc.hpp"

namespace drinfeld {

// Polynomial literals: sums of monomials in t, e.g. "t^2+2*t+1". Over a
// non-prime field, coefficients are polynomials in the generator x, e.g.
// "(x+1)*t^2+x". Integers are read modulo p.

inline std::string format_elem(const Field* F, Field::Elem a) {
    if (F->is_prime_field()) return std::to_string(static_cast<int>(a));
    auto d = F->digits(a);
    std::string out;
    for (int i = F->e() - 1; i >= 0; --i) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

inline std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    const Field* F = f.field();
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        Field::Elem c = f.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        std::string cs = format_elem(F, c);
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c != 1) {
            bool compound = cs.find('+') != std::string::npos;
            out += (compound ? "(" + cs + ")" : cs) + "*";
        }
        out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out;
}

inline std::string format_ratfunc(const RatFunc& x) {
    if (x.is_integral()) return format_poly(x.num());
    return "(" + format_poly(x.num()) + ")/(" + format_poly(x.den()) + ")";
}

namespace detail {

class LiteralParser {
   public:
    LiteralParser(const Field* F, std::string_view s) : F_(F), s_(s) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error("bad polynomial literal '" + std::string(s_) + "': " + why + " at position " +
                    std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    RatFunc expr() {
        RatFunc acc(F_);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        RatFunc first = term();
        acc = neg ? -first : first;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }
    RatFunc term() {
        RatFunc acc = factor();
        while (true) {
            if (eat('*'))
                acc *= factor();
            else if (eat('/'))
                acc /= factor();
            else
                break;
        }
        return acc;
    }
    RatFunc factor() {
        RatFunc base = primary();
        if (eat('^')) {
            skip();
            long long n = integer();
            base = base.pow(n);
        }
        return base;
    }
    long long integer() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        long long n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n = n * 10 + (s_[pos_] - '0');
            if (n > (1LL << 40)) fail("integer too large");
            ++pos_;
        }
        return n;
    }
    RatFunc primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 't') {
            ++pos_;
            return RatFunc(Poly::t(F_));
        }
        if (c == 'x') {
            ++pos_;
            if (F_->is_prime_field()) fail("generator x only exists over a non-prime field");
            return RatFunc(Poly::constant(F_, F_->generator()));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::from_int(F_, integer());
        fail("unexpected character");
    }

    const Field* F_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc parse_ratfunc(const Field* F, std::string_view s) { return detail::LiteralParser(F, s).parse(); }

inline Poly parse_poly(const Field* F, std::string_view s) {
    RatFunc r = parse_ratfunc(F, s);
    if (!r.is_integral()) throw Error("expected a polynomial, got '" + std::string(s) + "'");
    return r.num().field() ? r.num() : Poly(F);
}

/// Field from (p, e, modulus literal in x). The modulus is ignored for e == 1.
inline const Field* make_field(int p, int e, std::string_view modulus = {}) {
    if (e == 1) return Field::prime(p);
    if (modulus.empty()) throw Error("a non-prime field needs an explicit modulus");
    // read the modulus as a polynomial over F_p in the symbol x
    std::string s(modulus);
    for (auto& ch : s)
        if (ch == 'x') ch = 't';
    Poly m = parse_poly(Field::prime(p), s);
    if (m.degree() != e || !m.is_monic()) throw Error("modulus must be monic of degree e");
    std::vector<int> coeffs;
    for (auto c : m.coeffs()) coeffs.push_back(c);
    return Field::get(p, e, coeffs);
}

/// The modulus of a non-prime field as a literal in x ("" for prime fields).
inline std::string format_modulus(const Field* F) {
    if (F->is_prime_field()) return "";
    std::vector<Field::Elem> c;
    for (int v : F->modulus()) c.push_back(static_cast<Field::Elem>(v));
    std::string s = format_poly(Poly(Field::prime(F->p()), c));
    for (auto& ch : s)
        if (ch == 't') ch = 'x';
    return s;
}

}  // namespace drinfeld

#endif
