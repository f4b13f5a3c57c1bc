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

#ifndef DRINFELD_OPERATOR_HPP
#define DRINFELD_OPERATOR_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cosets.hpp"

namespace drinfeld {

struct WeightType {
    int k = 0;
    int m = 0;

    /// k = 2m mod (q-1); without it every space of forms is zero.
    bool congruent(int q) const {
        int r = q - 1;
        return ((k - 2 * m) % r + r) % r == 0;
    }
    std::vector<std::string> warnings(int q) const {
        std::vector<std::string> w;
        if (!congruent(q)) w.push_back("k is not congruent to 2m mod q-1: all spaces of forms are zero");
        if (m < 0 || m > q - 2) w.push_back("type outside {0,...,q-2}");
        return w;
    }
    friend bool operator==(const WeightType&, const WeightType&) = default;
};

inline WeightType make_weight_type(int k, int m) {
    if (k <= 0) throw Error("weight must be positive");
    return {k, m};
}

struct Term {
    RatFunc coeff;
    Mat2 mat;
};

/**
 * Finite sum f -> sum coeff * (f |_{k,m} mat) on forms invariant under
 * Gamma0(domain). The result is invariant under Gamma0(codomain).
 */
class Operator {
   public:
    Operator(IdealA domain, IdealA codomain, WeightType wt, std::vector<Term> terms = {})
        : domain_(std::move(domain)), codomain_(std::move(codomain)), wt_(wt), terms_(std::move(terms)) {}

    const IdealA& domain() const noexcept { return domain_; }
    const IdealA& codomain() const noexcept { return codomain_; }
    const WeightType& wt() const noexcept { return wt_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Field* field() const noexcept { return domain_.field(); }

    static Operator identity(const IdealA& n, WeightType wt) {
        return Operator(n, n, wt, {{RatFunc::one(n.field()), Mat2::identity(n.field())}});
    }
    static Operator zero(const IdealA& n, WeightType wt) { return Operator(n, n, wt); }

    Operator scaled(const RatFunc& c) const {
        std::vector<Term> t;
        for (auto& x : terms_) t.push_back({x.coeff * c, x.mat});
        return Operator(domain_, codomain_, wt_, std::move(t));
    }
    /// Same terms, canonicalized for another level: a divisor of the domain
    /// (restriction to old forms) or a multiple (forms of a smaller group).
    Operator with_domain(const IdealA& d) const {
        if (!domain_.divides(d) && !d.divides(domain_)) throw Error("new domain level must divide or be a multiple of the old one");
        return Operator(d, codomain_, wt_, terms_);
    }

    friend Operator operator+(const Operator& a, const Operator& b) {
        check_compatible(a, b);
        std::vector<Term> t = a.terms_;
        t.insert(t.end(), b.terms_.begin(), b.terms_.end());
        IdealA cod(lcm(a.codomain_.gen(), b.codomain_.gen()));
        return Operator(a.domain_, cod, a.wt_, std::move(t));
    }
    friend Operator operator-(const Operator& a, const Operator& b) {
        return a + b.scaled(-RatFunc::one(b.field()));
    }

    std::string to_string() const {
        std::string s;
        for (auto& t : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + format_ratfunc(t.coeff) + ")*|" + t.mat.to_string();
        }
        return s.empty() ? "0" : s;
    }

   private:
    static void check_compatible(const Operator& a, const Operator& b) {
        if (!(a.domain_ == b.domain_)) throw Error("operators have different domain levels");
        if (!(a.wt_ == b.wt_)) throw Error("operators have different weight/type");
    }

    IdealA domain_, codomain_;
    WeightType wt_;
    std::vector<Term> terms_;
};

/// outer o inner: f -> outer(inner(f)). Matrices multiply as inner * outer.
inline Operator compose(const Operator& outer, const Operator& inner) {
    if (!(outer.wt() == inner.wt())) throw Error("composition of different weight/type");
    if (!inner.codomain().divides(outer.domain()))
        throw Error("composition: inner codomain level must divide outer domain level");
    std::vector<Term> t;
    t.reserve(outer.terms().size() * inner.terms().size());
    for (auto& i : inner.terms())
        for (auto& o : outer.terms()) t.push_back({i.coeff * o.coeff, i.mat * o.mat});
    return Operator(inner.domain(), outer.codomain(), inner.wt(), std::move(t));
}

inline Operator compose(std::initializer_list<Operator> ops) {
    // leftmost is applied last
    std::vector<Operator> v(ops);
    Operator acc = v.back();
    for (int i = static_cast<int>(v.size()) - 2; i >= 0; --i) acc = compose(v[i], acc);
    return acc;
}

struct CanonicalOperator {
    IdealA domain;
    WeightType wt;
    std::map<CosetKey, RatFunc> table;

    bool is_zero() const { return table.empty(); }
    friend bool operator==(const CanonicalOperator& a, const CanonicalOperator& b) {
        return a.domain == b.domain && a.wt == b.wt && a.table == b.table;
    }
};

inline CanonicalOperator canonicalize(const Operator& op) {
    CanonicalOperator out{op.domain(), op.wt(), {}};
    const int k = op.wt().k, m = op.wt().m;
    for (auto& t : op.terms()) {
        if (t.coeff.is_zero()) continue;
        KeyedMatrix km = coset_key(t.mat, op.domain(), k, m);
        RatFunc c = t.coeff * km.scalar_adjust;
        auto [it, fresh] = out.table.try_emplace(km.key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.table.erase(it);
        }
    }
    return out;
}

/// Rebuilds an operator from its table (one term per coset).
inline Operator to_operator(const CanonicalOperator& c, const IdealA& codomain) {
    std::vector<Term> t;
    for (auto& [key, coeff] : c.table) t.push_back({coeff, coset_representative(key, c.domain)});
    return Operator(c.domain, codomain, c.wt, std::move(t));
}

inline bool op_equal(const Operator& a, const Operator& b) {
    if (!(a.domain() == b.domain())) throw Error("op_equal: different domain levels");
    if (!(a.wt() == b.wt())) throw Error("op_equal: different weight/type");
    return canonicalize(a).table == canonicalize(b).table;
}

/// Supplies Atkin-Lehner matrices; the default is al_representative.
using ALProvider = std::function<ALMatrix(const IdealA& d, const IdealA& n)>;

inline ALProvider default_al_provider() { return [](const IdealA& d, const IdealA& n) { return al_representative(d, n); }; }

inline RatFunc power_of(const Poly& P, long long e) { return RatFunc(P).pow(e); }

inline Operator op_Tp(const IdealA& p, const IdealA& n, WeightType wt) {
    if (!p.is_prime()) throw Error("T_p needs a prime p");
    if (p.divides(n)) throw Error("T_p needs p not dividing the level; use U_p");
    const Field* F = n.field();
    const Poly& P = p.gen();
    RatFunc c = power_of(P, wt.k - wt.m);
    std::vector<Term> t;
    t.push_back({c, Mat2(P, Poly(F), Poly(F), Poly::one(F))});
    for (auto& Q : polys_below_degree(F, P.degree())) t.push_back({c, Mat2(Poly::one(F), Q, Poly(F), P)});
    return Operator(n, n, wt, std::move(t));
}

inline Operator op_Up(const IdealA& p, const IdealA& n, WeightType wt) {
    if (!p.is_prime()) throw Error("U_p needs a prime p");
    if (!p.divides(n)) throw Error("U_p needs p dividing the level");
    const Field* F = n.field();
    const Poly& P = p.gen();
    RatFunc c = power_of(P, wt.k - wt.m);
    std::vector<Term> t;
    for (auto& Q : polys_below_degree(F, P.degree())) t.push_back({c, Mat2(Poly::one(F), Q, Poly(F), P)});
    return Operator(n, n, wt, std::move(t));
}

inline Operator op_W(const ALMatrix& W, WeightType wt) {
    al_zeta(W.matrix, W.d, W.n);
    return Operator(W.n, W.n, wt, {{RatFunc::one(W.n.field()), W.matrix}});
}

inline Operator op_W(const IdealA& d, const IdealA& n, WeightType wt, const ALProvider& al = default_al_provider()) {
    if (!d.exactly_divides(n)) throw Error("W_d needs an exact divisor d of n");
    return op_W(al(d, n), wt);
}

enum class Embedding { D1, DQuotient };

/// D_1 or D_{n/d} from level d to level n.
inline Operator op_embed(const IdealA& d_from, const IdealA& n_to, Embedding which, WeightType wt) {
    if (!d_from.divides(n_to)) throw Error("embedding needs d | n");
    const Field* F = n_to.field();
    if (which == Embedding::D1) return Operator(d_from, n_to, wt, {{RatFunc::one(F), Mat2::identity(F)}});
    Poly e = n_to.gen() / d_from.gen();
    if (!gcd(d_from.gen(), e).is_one()) throw Error("D_{n/d} needs (d, n/d) = 1");
    return Operator(d_from, n_to, wt, {{RatFunc::one(F), Mat2(e, Poly(F), Poly(F), Poly::one(F))}});
}

/// D_p from level m to level mp: f -> f|(P 0; 0 1). Unlike op_embed this
/// does not require (m, P) to be coprime to the quotient.
inline Operator op_Dp(const IdealA& m, const IdealA& p, WeightType wt) {
    const Field* F = m.field();
    return Operator(m, m * p, wt, {{RatFunc::one(F), Mat2(p.gen(), Poly(F), Poly(F), Poly::one(F))}});
}

inline Operator op_trace(const IdealA& m, const IdealA& p, WeightType wt) {
    if (p.divides(m)) throw Error("trace needs p not dividing m");
    std::vector<Term> t;
    for (auto& g : coset_reps(m, p)) t.push_back({RatFunc::one(m.field()), g});
    return Operator(m * p, m, wt, std::move(t));
}

inline Operator op_trace_twisted(const IdealA& d, const IdealA& m, const IdealA& p, WeightType wt,
                                 const ALProvider& al = default_al_provider()) {
    return compose(op_trace(m, p, wt), op_W(d, m * p, wt, al));
}

}  // namespace drinfeld

#endif
