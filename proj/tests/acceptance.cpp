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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 on any FAIL.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "drinfeld/suite.hpp"
#include "oracles.hpp"

using namespace drinfeld;
using oracle::lit;

namespace {

struct Check {
    bool ok = true;
    std::string why;
    void expect(bool c, const std::string& msg) {
        if (!c && ok) {
            ok = false;
            why = msg;
        }
    }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<std::string(Check&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    std::string info;
    try {
        info = body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.why = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.ok) ++failures;
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(2);
    ss << s;
    std::cout << "criterion " << n << ": " << (c.ok ? "PASS" : "FAIL") << "  " << title << "  [" << info
              << (c.ok ? "" : (info.empty() ? "" : "; ") + c.why) << "; " << ss.str() << "s]" << std::endl;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

std::string sample(const char* name) { return std::string(DRINFELD_SAMPLES_DIR) + "/" + name; }

int cli(const std::string& args) {
    std::string cmd = std::string(DRINFELD_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

// rows keyed without the randomization marker
std::string row_key(const json& row) {
    json p = row.at("params");
    p.erase("al_run");
    return row.at("identity").get<std::string>() + p.dump();
}

const Field* F2() { return make_field(2, 1); }
const Field* F3() { return make_field(3, 1); }

std::vector<std::pair<const Field*, Poly>> backend_pairs() {
    return {{F2(), lit(F2(), "t")}, {F3(), lit(F3(), "t")}, {F3(), lit(F3(), "t^2+1")}};
}

SuiteResult acceptance_suite(int random_al) {
    SuiteConfig c = parse_config(read_json(sample("acceptance_grid.json")));
    c.random_al = random_al;
    return run_suite(c);
}

}  // namespace

int main() {
    std::cout << "drinfeld acceptance" << std::endl;

    SuiteResult base;
    criterion(1, "identity catalog over the acceptance grid", [&](Check& c) {
        base = acceptance_suite(0);
        const json& rows = base.report.at("results");
        c.expect(base.summary.fail == 0, std::to_string(base.summary.fail) + " failures");
        // every identity passes somewhere for each q
        std::set<std::string> seen;
        std::set<std::string> qs;
        for (auto& r : rows) {
            const std::string q = r["params"]["q"].get<std::string>();
            qs.insert(q);
            if (r["status"] == "pass") seen.insert(q + "/" + r["identity"].get<std::string>());
            if (r["status"] == "not-applicable") {
                const Field* F = make_field(split_prime_power(std::stoi(q)).first, split_prime_power(std::stoi(q)).second,
                                            r["params"].value("modulus", std::string()));
                WeightType w{std::stoi(r["params"]["k"].get<std::string>()), std::stoi(r["params"]["m"].get<std::string>())};
                c.expect(!w.congruent(F->q()), "not-applicable on a congruent weight: " + r.dump());
            }
        }
        c.expect(qs == std::set<std::string>{"2", "3", "4"}, "missing fields");
        for (auto& q : qs)
            for (auto& n : identity_names()) c.expect(seen.count(q + "/" + n) > 0, n + " never passed for q=" + q);
        for (auto& s : base.report.at("skipped"))
            c.expect(s.at("reason") == "skipped: hypothesis (pi,P)=1", "unexpected skip " + s.dump());
        return std::to_string(base.summary.pass) + " pass, " + std::to_string(base.summary.not_applicable) +
               " not-applicable (k not 2m mod q-1), " + std::to_string(base.summary.skipped) + " skipped (pi,P)!=1";
    });

    criterion(2, "randomized Atkin-Lehner representatives (5 per tuple)", [&](Check& c) {
        SuiteResult r = acceptance_suite(5);
        std::map<std::string, std::string> ref;
        for (auto& row : base.report.at("results")) ref[row_key(row)] = row.at("status");
        std::map<std::string, int> runs;
        for (auto& row : r.report.at("results")) {
            auto it = ref.find(row_key(row));
            c.expect(it != ref.end(), "row without a baseline: " + row_key(row));
            if (it == ref.end()) continue;
            c.expect(row.at("status") == it->second, "verdict changed: " + row_key(row));
            ++runs[row_key(row)];
        }
        for (auto& [k, v] : ref) c.expect(runs[k] == 6, "expected 6 runs of " + k);
        return std::to_string(r.reports.size()) + " verdicts across 6 runs";
    });

    criterion(3, "scalar laws", [](Check& c) {
        std::mt19937_64 rng(3);
        int n_sq = 0, n_ker = 0;
        for (auto* F : {F2(), F3(), make_field(2, 2, "x^2+x+1")}) {
            for (const char* pis : {"t+1", "t^2+t+1"})
                for (auto wt : {WeightType{3, 1}, WeightType{4, 1}, WeightType{4, 2}, WeightType{5, 1}}) {
                    if (!wt.congruent(F->q())) continue;
                    Poly pi = lit(F, pis), P = lit(F, "t");
                    IdealA m(pi), p(P), mp = m * p;
                    const long long e = 2LL * wt.m - wt.k;
                    // (W_d^n)^2 = (zeta delta)^{2m-k} Id, for every unit zeta
                    for (auto& n : {m, mp})
                        for (auto& d : n.exact_divisors())
                            for (Field::Elem z = 1; z < static_cast<Field::Elem>(F->q()); ++z) {
                                ALMatrix W = randomize_al(al_representative(d, n), rng);
                                Mat2 M = W.matrix * Mat2(Poly::one(F), Poly(F), Poly(F), Poly::constant(F, z));
                                Field::Elem zeta = al_zeta(M, d, n);
                                auto sq = canonicalize(compose(op_W({M, d, n, zeta}, wt), op_W({M, d, n, zeta}, wt)));
                                RatFunc want = (RatFunc(Poly::constant(F, F->mul(W.zeta, z))) * RatFunc(d.gen())).pow(e);
                                c.expect(sq.table.size() == 1 && sq.table.begin()->first.is_identity() &&
                                             sq.table.begin()->second == want,
                                         "W^2 scalar for d=" + format_poly(d.gen()));
                                ++n_sq;
                            }
                    // W_m o Tr^(d) = delta^{2m-k} Tr^(m/d) or (delta/P)^{2m-k} Tr^(mp^2/d)
                    auto Trd = [&](const IdealA& d) { return op_trace_twisted(d, m, p, wt); };
                    for (auto& d : mp.exact_divisors()) {
                        Operator lhs = compose(op_W(m, mp, wt), Trd(d));
                        RatFunc s;
                        Operator base_rhs = Operator::zero(m, wt);
                        if (!p.divides(d)) {
                            s = RatFunc(d.gen()).pow(e);
                            base_rhs = Trd(m.quotient(d));
                        } else {
                            s = (RatFunc(d.gen()) / RatFunc(P)).pow(e);
                            base_rhs = Trd((mp * p).quotient(d));
                        }
                        auto L = canonicalize(lhs), R0 = canonicalize(base_rhs);
                        c.expect(L == canonicalize(base_rhs.scaled(s)), "ker-traces constant, d=" + format_poly(d.gen()));
                        // the constant is not absorbed: a wrong one is detected
                        if (!(s == RatFunc::one(F)))
                            c.expect(!(L == R0), "constant invisible, d=" + format_poly(d.gen()));
                        c.expect(!(L == canonicalize(base_rhs.scaled(s * RatFunc(lit(F, "t+1"))))), "wrong constant accepted");
                        ++n_ker;
                    }
                }
        }
        return std::to_string(n_sq) + " squared involutions, " + std::to_string(n_ker) + " twisted-trace constants";
    });

    criterion(4, "cusp geometry", [](Check& c) {
        std::mt19937_64 rng(4);
        int checked = 0;
        std::vector<const Field*> fields{F2(), F3(), make_field(2, 2, "x^2+x+1")};
        for (auto* F : fields) {
            c.expect(enumerate_cusps(IdealA(lit(F, "t"))).size() == 2, "X_0(t) cusp count");
            c.expect(enumerate_cusps(IdealA(lit(F, "t^2+t"))).size() == 4, "X_0(t^2+t) cusp count");
            std::vector<Poly> lv;
            for (const char* pis : {"t+1", "t^2+t+1", "t^3+2*t^2+2*t+1"})
                for (const char* Ps : {"t", "t^2+t+1", "t^2+1", "t^2+t+x"}) {
                    if (F->q() != 4 && std::string(Ps).find('x') != std::string::npos) continue;
                    Poly pi = lit(F, pis), P = lit(F, Ps);
                    if (!oracle::irreducible(P) || !gcd(pi, P).is_one()) continue;
                    lv.push_back(pi);
                    lv.push_back(pi * P);
                }
            for (auto& nu : lv) {
                IdealA n(nu);
                auto cs = enumerate_cusps(n);
                c.expect(static_cast<long long>(cs.size()) == oracle::cusp_count(nu), "cusp count " + format_poly(nu));
                for (auto& d : n.exact_divisors()) {
                    ALMatrix W = randomize_al(al_representative(d, n), rng);
                    auto perm = al_permutation(W, cs);
                    for (std::size_t i = 0; i < cs.size(); ++i) {
                        c.expect(perm[perm[i]] == static_cast<int>(i), "not an involution");
                        c.expect(cs[perm[i]].y == al_cusp_denominator(d, n, cs[i].y), "denominator formula");
                        ++checked;
                    }
                }
            }
        }
        return std::to_string(checked) + " (cusp, divisor) pairs";
    });

    criterion(5, "Eisenstein gate", [](Check& c) {
        for (auto [F, N] : std::vector<std::pair<const Field*, int>>{{F3(), 30}, {F2(), 40}}) {
            FormModel g = eisenstein_gk(F, 1, N);
            c.expect(is_integral(g.exp_inf), "g_1 not integral, q=" + std::to_string(F->q()));
            c.expect(congruent_mod(g.exp_inf, useries_one(F, N), lit(F, "t"), 1), "g_1 != 1 mod t");
            c.expect(g.exp_inf.prec() == N, "precision");
        }
        return "q=3 N=30, q=2 N=40";
    });

    criterion(6, "U_p backend equivalence", [](Check& c) {
        std::mt19937_64 rng(6);
        int n = 0;
        for (auto& [F, P] : backend_pairs())
            for (int i = 0; i < 100; ++i) {
                USeries f = oracle::random_integral_series(F, 30, rng);
                f.coeff(0) = RatFunc(oracle::random_poly(F, 2, rng));
                // the cyclotomic path throws on a Galois or recompression residue
                USeries a = series_Up_cyclotomic(f, P);
                USeries b = series_Up_goss(f, P);
                c.expect(a == b, "backends differ for P=" + format_poly(P));
                ++n;
            }
        return std::to_string(n) + " series, zero residues";
    });

    criterion(7, "cross-module oracle", [](Check& c) {
        const Field* F = F3();
        const int N = 30;
        int n = 0;
        FormModel g1 = eisenstein_gk(F, 1, N);
        FormModel g2 = model_product(g1, g1);
        for (const char* Ps : {"t", "t^2+1"}) {
            Poly P = lit(F, Ps);
            IdealA m(lit(F, "t+1"));
            const int out = up_precision(N, P);
            for (auto* g : {&g1, &g2}) {
                const WeightType wt = g->wt;
                const RatFunc Pr(P);
                IdentityParams prm{F, lit(F, "t+1"), P, wt, std::nullopt};
                auto eval = [&](const Operator& op, bool dp) { return evaluate_table(canonicalize(op), *g, dp, P, N); };
                auto both = [&](const std::string& id, bool dp, const USeries& want, const std::string& tag) {
                    for (auto& cs : build_identity(id, prm)) {
                        c.expect(eval(cs.lhs, dp) == want, id + " lhs " + tag + " P=" + Ps);
                        c.expect(eval(cs.rhs, dp) == want, id + " rhs " + tag + " P=" + Ps);
                        n += 2;
                    }
                };
                USeries g_out = g->exp_inf.truncated(out);
                USeries tp = series_Tp(g->exp_inf, wt, P).truncated(out);
                // (g) on D_1 g and D_p g
                USeries tr1 = trace_via_eqTr(model_D1(*g, m, P), P);
                USeries trp = trace_via_eqTr(model_Dp(*g, m, P), P);
                c.expect(tr1 == g_out, "Tr D_1 g != g");
                both("eqTr", false, tr1, "D_1");
                both("eqTr", true, trp, "D_p");
                // (k)
                c.expect(trp == tp.scaled(Pr.pow(wt.m - wt.k)), "Tr D_p g != P^{m-k} T_p g");
                both("dirsum-aux-1", false, trp, "");
                // (l): Tr^(p) D_p g = Tr(P^{2m-k} g)
                USeries trpp = trace_via_eqTr(model_al_image(model_Dp(*g, m, P), P), P);
                c.expect(trpp == g_out.scaled(Pr.pow(2LL * wt.m - wt.k)), "Tr^(p) D_p g");
                both("dirsum-aux-2", false, trpp, "");
                // (n)
                USeries ud = series_Up(series_Dp(g->exp_inf, wt, P), P);
                c.expect(ud.is_zero(), "U_p D_p g != 0");
                both("up-dp-kernel", false, ud, "");
                // (o)
                USeries rhs = series_Dp(g->exp_inf, wt, P).scaled(Pr.pow(wt.k - wt.m)).truncated(out) +
                              series_Up(g->exp_inf, P);
                c.expect(rhs == tp, "T_p decomposition on series");
                both("tp-decomposition", false, tp, "");
            }
        }
        return std::to_string(n) + " table evaluations on g_1, g_1^2 (P = t, t^2+1)";
    });

    criterion(8, "Vincent bounds", [](Check& c) {
        const Field* F = F3();
        const int N = 30;
        Poly pi = lit(F, "t+1"), P = lit(F, "t");
        IdealA m(pi);
        const long long qd1 = 2, n = 1;
        FormModel g1 = eisenstein_gk(F, 1, N);
        std::string info;
        for (int r = 0; r <= 2; ++r) {
            const long long pr = ipow(3, r);
            FormModel gr = vincent_g(static_cast<int>(n), r, pi, P, N);
            Valuation vw = series_vp(gr.al_image(IdealA(P)), P);
            c.expect(vw >= n * pr * qd1 + pr, "v_p(g_(r)|W_p) bound, r=" + std::to_string(r));
            for (auto* fm : {&g1}) {
                for (bool dp : {false, true}) {
                    FormModel f = dp ? model_Dp(*fm, m, P) : model_D1(*fm, m, P);
                    const int type = f.wt.m + gr.wt.m;
                    Valuation vf = series_vp(f.exp_inf, P);
                    Valuation vfw = series_vp(f.al_image(IdealA(P)), P);
                    USeries tr = trace_via_eqTr(model_product(f, gr), P);
                    USeries diff = tr - f.exp_inf.truncated(tr.prec());
                    Valuation lhs = series_vp(diff, P);
                    long long bound = std::min<long long>(pr + vf, pr + pr * n * qd1 - type + vfw);
                    c.expect(lhs >= bound, "trace bound r=" + std::to_string(r) + (dp ? " D_p" : " D_1"));
                    // the two halves Tr(fg) - fg and fg - f, reported separately
                    FormModel fg = model_product(f, gr);
                    Valuation vA = series_vp(tr - fg.exp_inf.truncated(tr.prec()), P);
                    Valuation vB = series_vp((fg.exp_inf - f.exp_inf).truncated(tr.prec()), P);
                    auto sv = [](Valuation v) { return v == kInfinity ? std::string("inf") : std::to_string(v); };
                    info += (info.empty() ? "" : ", ") + std::string(dp ? "D_p" : "D_1") + " r=" + std::to_string(r) +
                            ": " + sv(lhs) + ">=" + std::to_string(bound) + " (A " + sv(vA) + ", B " + sv(vB) + ")";
                }
            }
        }
        return info;
    });

    criterion(9, "integrality monotonicity", [](Check& c) {
        std::mt19937_64 rng(9);
        int n = 0;
        for (auto& [F, P] : backend_pairs())
            for (int i = 0; i < 200; ++i) {
                USeries f = oracle::random_integral_series(F, 30, rng);
                f.coeff(0) = RatFunc(oracle::random_poly(F, 2, rng));
                f = f.scaled(RatFunc(P).pow(static_cast<long long>(rng() % 3)));
                Valuation v = series_vp(f, P);
                c.expect(series_vp(series_Up(f, P), P) >= v, "U_p lowered v_p");
                c.expect(series_vp(series_Dp(f, {4, 1}, P), P) >= v, "D_p lowered v_p");
                ++n;
            }
        return std::to_string(n) + " series";
    });

    criterion(10, "negative controls", [](Check& c) {
        int a = cli("verify --config " + sample("perturbed.json"));
        c.expect(a == 1, "perturbed identity exit " + std::to_string(a));
        std::string g = "/tmp/drinfeld_acceptance_g1.json";
        int w = cli("series gk --q 3 --k 1 --order 30 --out " + g);
        c.expect(w == 0, "writing g_1");
        int b = cli("series up --in " + g + " --P t --inject-fault residual");
        c.expect(b == 3, "corrupted series comparison exit " + std::to_string(b));
        int d = cli("series up --in " + g + " --P t^2+1 --inject-fault galois");
        c.expect(d == 3, "corrupted Galois check exit " + std::to_string(d));
        return "exit codes " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(d);
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
