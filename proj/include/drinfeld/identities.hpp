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

#ifndef DRINFELD_IDENTITIES_HPP
#define DRINFELD_IDENTITIES_HPP

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "operator.hpp"

namespace drinfeld {

/// Level m = (pi), prime p = (P), weight/type, optional divisor filter.
struct IdentityParams {
    const Field* F = nullptr;
    Poly pi;
    Poly P;
    WeightType wt;
    std::optional<Poly> d;

    std::map<std::string, std::string> describe() const {
        std::map<std::string, std::string> out{{"q", std::to_string(F->q())},
                                               {"pi", format_poly(pi)},
                                               {"P", format_poly(P)},
                                               {"k", std::to_string(wt.k)},
                                               {"m", std::to_string(wt.m)}};
        if (!F->is_prime_field()) out["modulus"] = format_modulus(F);
        if (d) out["d"] = format_poly(*d);
        return out;
    }
};

/// One operator equation lhs = rhs to be compared in canonical form.
struct IdentityCase {
    std::string identity;
    std::map<std::string, std::string> params;
    Operator lhs;
    Operator rhs;
};

enum class Status { Pass, Fail, NotApplicable };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        default:
            return "not-applicable";
    }
}

struct TableDiff {
    CosetKey key;
    std::optional<RatFunc> lhs, rhs;
};

struct IdentityReport {
    std::string identity;
    std::map<std::string, std::string> params;
    Status status = Status::NotApplicable;
    std::string reason;
    std::optional<CanonicalOperator> lhs, rhs;
    std::vector<TableDiff> diff;

    bool pass() const { return status == Status::Pass; }
};

inline std::vector<TableDiff> table_diff(const CanonicalOperator& a, const CanonicalOperator& b) {
    std::vector<TableDiff> out;
    for (auto& [k, v] : a.table) {
        auto it = b.table.find(k);
        if (it == b.table.end())
            out.push_back({k, v, std::nullopt});
        else if (!(it->second == v))
            out.push_back({k, v, it->second});
    }
    for (auto& [k, v] : b.table)
        if (!a.table.count(k)) out.push_back({k, std::nullopt, v});
    return out;
}

inline IdentityReport verify_case(const IdentityCase& c) {
    IdentityReport r{c.identity, c.params, Status::Fail, {}, std::nullopt, std::nullopt, {}};
    if (!(c.lhs.domain() == c.rhs.domain()) || !(c.lhs.wt() == c.rhs.wt()))
        throw Error("identity " + c.identity + ": sides live on different domains");
    r.lhs = canonicalize(c.lhs);
    r.rhs = canonicalize(c.rhs);
    r.diff = table_diff(*r.lhs, *r.rhs);
    r.status = r.diff.empty() ? Status::Pass : Status::Fail;
    return r;
}

class NotApplicable : public Error {
   public:
    using Error::Error;
};

namespace detail {

struct Ctx {
    const IdentityParams& prm;
    const ALProvider& al;
    IdealA m, p, mp;
    WeightType wt;
    const Field* F;

    Ctx(const IdentityParams& x, const ALProvider& a)
        : prm(x), al(a), m(x.pi), p(x.P), mp(IdealA(x.pi) * IdealA(x.P)), wt(x.wt), F(x.F) {}

    Operator W(const IdealA& d, const IdealA& n) const { return op_W(d, n, wt, al); }
    Operator Id(const IdealA& n) const { return Operator::identity(n, wt); }
    Operator U() const { return op_Up(p, mp, wt); }
    Operator T() const { return op_Tp(p, m, wt); }
    Operator Tr() const { return op_trace(m, p, wt); }
    Operator Trd(const IdealA& d) const { return compose(Tr(), W(d, mp)); }
    Operator D1() const { return op_embed(m, mp, Embedding::D1, wt); }
    Operator Dp() const { return op_Dp(m, p, wt); }
    RatFunc pw(const Poly& x, long long e) const { return power_of(x, e); }
    long long e2mk() const { return 2LL * wt.m - wt.k; }

    /// Exact divisors, restricted to the optional filter.
    std::vector<IdealA> divisors(const IdealA& n) const {
        std::vector<IdealA> out;
        for (auto& d : n.exact_divisors())
            if (!prm.d || d == IdealA(*prm.d)) out.push_back(d);
        return out;
    }

    IdentityCase mk(const std::string& id, std::map<std::string, std::string> extra, Operator lhs,
                    Operator rhs) const {
        auto params = prm.describe();
        for (auto& [k, v] : extra) params[k] = v;
        return {id, std::move(params), std::move(lhs), std::move(rhs)};
    }
};

inline std::string lit(const IdealA& a) { return format_poly(a.gen()); }

inline std::vector<IdentityCase> involution_square(const Ctx& c) {
    std::vector<IdentityCase> out;
    for (auto& n : {c.m, c.mp})
        for (auto& d : c.divisors(n)) {
            ALMatrix W1 = c.al(d, n), W2 = c.al(d, n);
            // both factors represent the same involution; zeta is the same
            RatFunc s = (RatFunc(Poly::constant(c.F, W1.zeta)) * RatFunc(d.gen())).pow(c.e2mk());
            out.push_back(c.mk("involution-square", {{"n", lit(n)}, {"d", lit(d)}},
                               compose(op_W(W2, c.wt), op_W(W1, c.wt)), c.Id(n).scaled(s)));
        }
    return out;
}

inline std::vector<IdentityCase> al_product(const Ctx& c) {
    std::vector<IdentityCase> out;
    for (auto& n : {c.m, c.mp}) {
        auto ds = n.exact_divisors();
        for (auto& d1 : c.divisors(n))
            for (auto& d2 : ds) {
                IdealA g = gcd(d1, d2);
                IdealA d3 = (d1 * d2).quotient(g * g);
                Operator lhs = compose(c.W(d2, n), c.W(d1, n));
                Operator rhs = c.W(d3, n).scaled(c.pw(g.gen(), c.e2mk()));
                out.push_back(c.mk("al-product", {{"n", lit(n)}, {"d1", lit(d1)}, {"d2", lit(d2)}}, lhs, rhs));
            }
    }
    return out;
}

inline std::vector<IdentityCase> fricke_factorization(const Ctx& c) {
    std::vector<IdentityCase> out;
    for (auto& n : {c.m, c.mp}) {
        if (n.is_unit()) continue;
        Operator lhs = c.Id(n);
        std::string parts;
        for (auto& pp : n.prime_power_parts()) {
            lhs = compose(c.W(pp, n), lhs);
            parts += (parts.empty() ? "" : ",") + lit(pp);
        }
        out.push_back(c.mk("fricke-factorization", {{"n", lit(n)}, {"parts", parts}}, lhs, c.W(n, n)));
    }
    return out;
}

inline std::vector<IdentityCase> lemma_dw(const Ctx& c) {
    std::vector<IdentityCase> out;
    for (auto& n : {c.m, c.mp})
        for (auto& d : c.divisors(n)) {
            Operator lhs = op_embed(d, n, Embedding::DQuotient, c.wt);
            Operator rhs = compose(c.W(n.quotient(d), n), op_embed(d, n, Embedding::D1, c.wt));
            out.push_back(c.mk("lemma-DW", {{"n", lit(n)}, {"d", lit(d)}}, lhs, rhs));
        }
    return out;
}

inline std::vector<IdentityCase> thm_comm(const Ctx& c) {
    std::vector<IdentityCase> out;
    for (auto& d : c.divisors(c.m)) {
        Operator lhs = compose(c.W(d, c.m), c.T());
        Operator rhs = compose(c.T(), c.W(d, c.m));
        out.push_back(c.mk("thm-comm", {{"d", lit(d)}}, lhs, rhs));
    }
    return out;
}

inline std::vector<IdentityCase> cor_comm(const Ctx& c) {
    std::vector<IdentityCase> out;
    for (auto& d : c.divisors(c.m)) {
        Operator lhs = compose(c.W(d, c.mp), c.U());
        Operator rhs = compose(c.U(), c.W(d, c.mp));
        out.push_back(c.mk("cor-comm", {{"d", lit(d)}}, lhs, rhs));
    }
    return out;
}

inline std::vector<IdentityCase> eq_tr(const Ctx& c) {
    Operator rhs = c.Id(c.mp) + compose(c.U(), c.W(c.p, c.mp)).scaled(c.pw(c.p.gen(), -c.wt.m));
    return {c.mk("eqTr", {}, c.Tr(), rhs)};
}

inline std::vector<IdentityCase> twist(const Ctx& c) {
    std::vector<IdentityCase> out;
    const Poly& P = c.p.gen();
    for (auto& d : c.divisors(c.mp)) {
        Operator lhs = c.Trd(d);
        if (!c.p.divides(d)) {
            RatFunc s = c.pw(P, -c.wt.m);
            Operator r1 = c.W(d, c.mp) + compose(c.U(), c.W(d * c.p, c.mp)).scaled(s);
            Operator r2 = c.W(d, c.mp) + compose({c.W(d, c.mp), c.U(), c.W(c.p, c.mp)}).scaled(s);
            out.push_back(c.mk("twist", {{"d", lit(d)}, {"branch", "p-not-dividing-d"}, {"form", "twist"}}, lhs, r1));
            out.push_back(c.mk("twist", {{"d", lit(d)}, {"branch", "p-not-dividing-d"}, {"form", "twist2"}}, lhs, r2));
        } else {
            RatFunc s = c.pw(P, c.wt.m - c.wt.k);
            IdealA dp = d.quotient(c.p);
            Operator r1 = c.W(d, c.mp) + compose(c.U(), c.W(dp, c.mp)).scaled(s);
            Operator r2 = c.W(d, c.mp) + compose(c.W(dp, c.mp), c.U()).scaled(s);
            out.push_back(c.mk("twist", {{"d", lit(d)}, {"branch", "p-dividing-d"}, {"form", "twist"}}, lhs, r1));
            out.push_back(c.mk("twist", {{"d", lit(d)}, {"branch", "p-dividing-d"}, {"form", "twist2"}}, lhs, r2));
        }
    }
    return out;
}

inline std::vector<IdentityCase> ker_traces(const Ctx& c) {
    std::vector<IdentityCase> out;
    const Poly& P = c.p.gen();
    for (auto& d : c.divisors(c.mp)) {
        Operator lhs = compose(c.W(c.m, c.mp), c.Trd(d));
        if (!c.p.divides(d)) {
            Operator rhs = c.Trd(c.m.quotient(d)).scaled(c.pw(d.gen(), c.e2mk()));
            out.push_back(c.mk("ker-traces", {{"d", lit(d)}, {"branch", "p-not-dividing-d"}}, lhs, rhs));
        } else {
            IdealA d2 = (c.mp * c.p).quotient(d);
            RatFunc s = (RatFunc(d.gen()) / RatFunc(P)).pow(c.e2mk());
            out.push_back(
                c.mk("ker-traces", {{"d", lit(d)}, {"branch", "p-dividing-d"}}, lhs, c.Trd(d2).scaled(s)));
        }
    }
    return out;
}

inline std::vector<IdentityCase> newform_commutator(const Ctx& c) {
    const Poly& P = c.p.gen();
    Operator Wp = c.W(c.p, c.mp);
    Operator lhs = compose(Wp, c.U()) - compose(c.U(), c.W(c.p, c.mp));
    Operator rhs = compose(c.W(c.p, c.mp), c.Trd(c.p)).scaled(c.pw(P, c.wt.k - c.wt.m)) -
                   c.Tr().scaled(c.pw(P, c.wt.m));
    return {c.mk("newform-commutator", {}, lhs, rhs)};
}

inline std::vector<IdentityCase> dirsum_aux_1(const Ctx& c) {
    Operator lhs = compose(c.Tr(), c.Dp());
    Operator rhs = c.T().scaled(c.pw(c.p.gen(), c.wt.m - c.wt.k));
    return {c.mk("dirsum-aux-1", {}, lhs, rhs)};
}

inline std::vector<IdentityCase> dirsum_aux_2(const Ctx& c) {
    Operator lhs = compose(c.Trd(c.p), c.Dp());
    Operator rhs = c.Id(c.m).scaled(c.pw(c.p.gen(), c.e2mk()));
    return {c.mk("dirsum-aux-2", {}, lhs, rhs)};
}

inline std::vector<IdentityCase> cross_level(const Ctx& c) {
    const IdealA one = IdealA::unit(c.F);
    const WeightType wt = c.wt;
    Operator D1_p_mp = op_embed(c.p, c.mp, Embedding::D1, wt);
    Operator Dm_p_mp = op_embed(c.p, c.mp, Embedding::DQuotient, wt);
    Operator D1_1_m = op_embed(one, c.m, Embedding::D1, wt);
    Operator D1_1_mp = op_embed(one, c.mp, Embedding::D1, wt);
    Operator Tr_p_1 = op_trace(one, c.p, wt);
    Operator Trp_p_1 = compose(Tr_p_1, c.W(c.p, c.p));
    std::vector<IdentityCase> out;
    out.push_back(c.mk("cross-level", {{"case", "Tr o D_1"}}, compose(c.Tr(), D1_p_mp), compose(D1_1_m, Tr_p_1)));
    out.push_back(
        c.mk("cross-level", {{"case", "Tr^(p) o D_1"}}, compose(c.Trd(c.p), D1_p_mp), compose(D1_1_m, Trp_p_1)));
    out.push_back(c.mk("cross-level", {{"case", "Tr o D_m"}}, compose(c.Tr(), Dm_p_mp),
                       compose({c.W(c.m, c.mp), D1_1_mp, Tr_p_1})));
    out.push_back(c.mk("cross-level", {{"case", "Tr^(p) o D_m"}}, compose(c.Trd(c.p), Dm_p_mp),
                       compose({c.W(c.m, c.mp), D1_1_mp, Trp_p_1})));
    return out;
}

inline std::vector<IdentityCase> up_dp_kernel(const Ctx& c) {
    return {c.mk("up-dp-kernel", {}, compose(c.U(), c.Dp()), Operator::zero(c.m, c.wt))};
}

inline std::vector<IdentityCase> tp_decomposition(const Ctx& c) {
    Operator rhs = c.Dp().scaled(c.pw(c.p.gen(), c.wt.k - c.wt.m)) + compose(c.U(), c.D1());
    return {c.mk("tp-decomposition", {}, c.T(), rhs)};
}

using Builder = std::vector<IdentityCase> (*)(const Ctx&);

inline const std::vector<std::pair<std::string, Builder>>& catalog() {
    static const std::vector<std::pair<std::string, Builder>> cat{
        {"involution-square", involution_square},
        {"al-product", al_product},
        {"fricke-factorization", fricke_factorization},
        {"lemma-DW", lemma_dw},
        {"thm-comm", thm_comm},
        {"cor-comm", cor_comm},
        {"eqTr", eq_tr},
        {"twist", twist},
        {"ker-traces", ker_traces},
        {"newform-commutator", newform_commutator},
        {"dirsum-aux-1", dirsum_aux_1},
        {"dirsum-aux-2", dirsum_aux_2},
        {"cross-level", cross_level},
        {"up-dp-kernel", up_dp_kernel},
        {"tp-decomposition", tp_decomposition},
    };
    return cat;
}

}  // namespace detail

inline std::vector<std::string> identity_names() {
    std::vector<std::string> out;
    for (auto& [n, b] : detail::catalog()) out.push_back(n);
    return out;
}

/// Empty when the parameters satisfy the standing hypotheses.
inline std::string check_hypotheses(const IdentityParams& prm) {
    if (!prm.F) return "no field";
    if (prm.pi.is_zero() || !prm.pi.is_monic()) return "pi must be monic";
    if (prm.P.degree() < 1 || !prm.P.is_monic() || !is_irreducible(prm.P)) return "P must be monic irreducible";
    if (!gcd(prm.pi, prm.P).is_one()) return "hypothesis (pi,P)=1";
    if (prm.wt.k <= 0) return "weight must be positive";
    // the canonical form identifies f|zeta*I with f, which needs this
    if (!prm.wt.congruent(prm.F->q())) return "k not congruent to 2m mod q-1";
    return {};
}

/// Builds the equations of one identity; throws NotApplicable on a
/// hypothesis violation.
inline std::vector<IdentityCase> build_identity(const std::string& name, const IdentityParams& prm,
                                                const ALProvider& al = default_al_provider()) {
    if (auto why = check_hypotheses(prm); !why.empty()) throw NotApplicable(why);
    if (prm.d) {
        IdealA mp = IdealA(prm.pi) * IdealA(prm.P);
        if (!IdealA(*prm.d).exactly_divides(mp)) throw NotApplicable("d is not an exact divisor of mp");
    }
    for (auto& [n, b] : detail::catalog())
        if (n == name) {
            detail::Ctx c(prm, al);
            return b(c);
        }
    throw Error("unknown identity '" + name + "'");
}

/// Optional hook applied to every case before comparison (negative controls).
using CaseMutator = std::function<void(IdentityCase&)>;

inline std::vector<IdentityReport> verify_identity(const std::string& name, const IdentityParams& prm,
                                                   const ALProvider& al = default_al_provider(),
                                                   const CaseMutator& mutate = {}) {
    std::vector<IdentityCase> cases;
    try {
        cases = build_identity(name, prm, al);
    } catch (const NotApplicable& e) {
        IdentityReport r;
        r.identity = name;
        r.params = prm.describe();
        r.status = Status::NotApplicable;
        r.reason = e.what();
        return {r};
    }
    std::vector<IdentityReport> out;
    for (auto& c : cases) {
        if (mutate) mutate(c);
        out.push_back(verify_case(c));
    }
    return out;
}

/// Negative control: adds 1 to the first coefficient of the left side.
inline void perturb_first_coefficient(IdentityCase& c) {
    auto terms = c.lhs.terms();
    if (terms.empty()) {
        terms.push_back({RatFunc::one(c.lhs.field()), Mat2::identity(c.lhs.field())});
    } else {
        terms[0].coeff += RatFunc::one(c.lhs.field());
    }
    c.lhs = Operator(c.lhs.domain(), c.lhs.codomain(), c.lhs.wt(), std::move(terms));
}

/// Atkin-Lehner matrices randomized per request, deterministic in the seed.
class RandomALProvider {
   public:
    explicit RandomALProvider(unsigned long long seed) : rng_(std::make_shared<std::mt19937_64>(seed)) {}
    ALMatrix operator()(const IdealA& d, const IdealA& n) const { return randomize_al(al_representative(d, n), *rng_); }

   private:
    std::shared_ptr<std::mt19937_64> rng_;
};

}  // namespace drinfeld

#endif
