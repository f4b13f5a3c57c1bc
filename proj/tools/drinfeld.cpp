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

// drinfeld: verification suites, u-series and cusp reports.
// Exit codes: 0 ok, 1 identity failure, 2 usage/config, 3 internal inconsistency.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "drinfeld/suite.hpp"

using namespace drinfeld;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kInconsistent = 3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void emit(const json& j, const std::string& out) {
    std::string s = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(out);
    if (!f) throw ConfigError("cannot write '" + out + "'");
    f << s;
}

struct FieldOpts {
    int q = 3;
    std::string modulus;
    const Field* get() const {
        try {
            return field_from_q(q, modulus);
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
    }
};

Poly poly_arg(const Field* F, const std::string& s, const char* what) {
    try {
        return parse_poly(F, s);
    } catch (const Error& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

Poly prime_arg(const Field* F, const std::string& s) {
    Poly P = poly_arg(F, s, "--P");
    if (P.degree() < 1 || !P.is_monic() || !is_irreducible(P)) throw ConfigError("--P must be a monic prime");
    return P;
}

FormModel form_arg(const std::string& path) {
    try {
        return form_from_json(read_json_file(path));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("cannot read form from '" + path + "': " + e.what());
    }
}

UpBackend backend_arg(const std::string& b) {
    if (b == "goss") return UpBackend::Goss;
    if (b == "cyclotomic") return UpBackend::Cyclotomic;
    throw ConfigError("--backend must be goss or cyclotomic");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"drinfeld: Hecke and Atkin-Lehner operator calculus for Drinfeld modular forms"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity catalog over a parameter grid");
    std::string config_path, out_path, perturb;
    int workers = 0, random_al = -1;
    verify->add_option("--config", config_path, "suite configuration (JSON)")->required();
    verify->add_option("--out", out_path, "report path (default: config 'output' or stdout)");
    verify->add_option("--perturb", perturb, "corrupt the left side of this identity (negative control)");
    verify->add_option("--workers", workers, "worker threads");
    verify->add_option("--random-al", random_al, "extra runs with randomized Atkin-Lehner matrices");

    // series
    auto* series = app.add_subcommand("series", "u-expansions");
    series->require_subcommand(1);
    FieldOpts fo;
    int k = 1, order = 30, n = 1, r = 0;
    std::string in_path, P_lit = "t", pi_lit = "t+1", backend = "goss", fault, level_lit, subtract;
    auto field_flags = [&](CLI::App* s) {
        s->add_option("--q", fo.q, "field size");
        s->add_option("--modulus", fo.modulus, "F_q modulus in x for non-prime q");
    };
    auto* s_gk = series->add_subcommand("gk", "Eisenstein series g_k");
    field_flags(s_gk);
    s_gk->add_option("--k", k)->required();
    s_gk->add_option("--order", order, "precision N");
    s_gk->add_option("--out", out_path);

    auto in_flags = [&](CLI::App* s, bool needP) {
        s->add_option("--in", in_path, "input series/form JSON")->required();
        auto* o = s->add_option("--P", P_lit, "prime P");
        if (needP) o->required();
        s->add_option("--out", out_path);
    };
    auto* s_up = series->add_subcommand("up", "U_p");
    in_flags(s_up, true);
    s_up->add_option("--backend", backend, "goss | cyclotomic");
    s_up->add_option("--inject-fault", fault, "galois | residual (cyclotomic backend self-test)");
    auto* s_tp = series->add_subcommand("tp", "T_p");
    in_flags(s_tp, true);
    s_tp->add_option("--backend", backend, "goss | cyclotomic");
    auto* s_dp = series->add_subcommand("dp", "D_p");
    in_flags(s_dp, true);
    auto* s_tr = series->add_subcommand("trace", "Tr via f + P^-m U_p(f|W_p)");
    in_flags(s_tr, true);
    s_tr->add_option("--backend", backend, "goss | cyclotomic");
    auto* s_vp = series->add_subcommand("vp", "P-adic valuation of a series");
    in_flags(s_vp, true);
    s_vp->add_option("--subtract", subtract, "subtract this constant first");
    auto* s_vin = series->add_subcommand("vincent", "the forms g_(r)");
    field_flags(s_vin);
    s_vin->add_option("--n", n);
    s_vin->add_option("--r", r);
    s_vin->add_option("--pi", pi_lit);
    s_vin->add_option("--P", P_lit);
    s_vin->add_option("--order", order, "precision N");
    s_vin->add_option("--out", out_path);
    auto cusp_flags = [&](CLI::App* s) {
        field_flags(s);
        s->add_option("--level", level_lit, "level n")->required();
        s->add_option("--out", out_path);
        s->add_flag("--json", "JSON output (default)");
    };
    auto* s_cusps = series->add_subcommand("cusps", "cusps of X_0(n) with Atkin-Lehner permutations");
    cusp_flags(s_cusps);
    auto* cusps = app.add_subcommand("cusps", "cusps of X_0(n) with Atkin-Lehner permutations");
    cusp_flags(cusps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed()) {
            SuiteConfig c = parse_config(read_json_file(config_path));
            if (!perturb.empty()) {
                auto names = identity_names();
                if (std::find(names.begin(), names.end(), perturb) == names.end())
                    throw ConfigError("unknown identity '" + perturb + "'");
                c.perturb = perturb;
                c.echo["perturb"] = perturb;
            }
            if (workers > 0) c.workers = workers;
            if (random_al >= 0) c.random_al = random_al;
            SuiteResult res = run_suite(c);
            emit(res.report, out_path.empty() ? c.output : out_path);
            std::cerr << "pass " << res.summary.pass << ", fail " << res.summary.fail << ", not-applicable "
                      << res.summary.not_applicable << ", skipped " << res.summary.skipped << "\n";
            return res.failed() ? kFail : kOk;
        }
        if (cusps->parsed() || s_cusps->parsed()) {
            const Field* F = fo.get();
            Poly nv = poly_arg(F, level_lit, "--level");
            if (nv.is_zero() || !nv.is_monic()) throw ConfigError("--level must be monic");
            emit(cusps_to_json(IdealA(nv)), out_path);
            return kOk;
        }
        if (s_gk->parsed()) {
            if (k < 1 || order < 1) throw ConfigError("--k and --order must be positive");
            emit(form_to_json(eisenstein_gk(fo.get(), k, order)), out_path);
            return kOk;
        }
        if (s_vin->parsed()) {
            const Field* F = fo.get();
            if (n < 1 || r < 0 || order < 1) throw ConfigError("need --n >= 1, --r >= 0, --order >= 1");
            Poly P = prime_arg(F, P_lit), pi = poly_arg(F, pi_lit, "--pi");
            if (!gcd(pi, P).is_one()) throw ConfigError("hypothesis (pi,P)=1");
            emit(form_to_json(vincent_g(n, r, pi, P, order)), out_path);
            return kOk;
        }
        FormModel f = form_arg(in_path);
        const Field* F = f.exp_inf.zero().field();
        Poly P = prime_arg(F, P_lit);
        IdealA p(P);
        if (s_up->parsed()) {
            UpBackend b = backend_arg(backend);
            USeries out;
            if (!fault.empty()) {
                Fault fl = fault == "galois" ? Fault::Galois : fault == "residual" ? Fault::Residual : Fault::None;
                if (fl == Fault::None) throw ConfigError("--inject-fault must be galois or residual");
                out = series_Up_cyclotomic(f.exp_inf, P, fl);
            } else {
                out = series_Up(f.exp_inf, P, b);
            }
            emit(series_to_json(out, IdealA(lcm(f.level.gen(), P)), f.wt), out_path);
            return kOk;
        }
        if (s_tp->parsed()) {
            if (p.divides(f.level)) throw ConfigError("T_p needs p not dividing the level");
            emit(series_to_json(series_Tp(f.exp_inf, f.wt, P, backend_arg(backend)), f.level, f.wt), out_path);
            return kOk;
        }
        if (s_dp->parsed()) {
            FormModel g = model_Dp(f, f.level, P);
            emit(form_to_json(g), out_path);
            return kOk;
        }
        if (s_tr->parsed()) {
            if (!p.divides(f.level)) throw ConfigError("the trace needs p dividing the level");
            USeries tr;
            try {
                tr = trace_via_eqTr(f, P, backend_arg(backend));
            } catch (const InconsistencyError&) {
                throw;
            } catch (const Error& e) {
                throw ConfigError(e.what());
            }
            emit(series_to_json(tr, f.level.quotient(p), f.wt), out_path);
            return kOk;
        }
        if (s_vp->parsed()) {
            USeries g = f.exp_inf;
            if (!subtract.empty())
                g = g - USeries::constant(RatFunc(F), parse_ratfunc(F, subtract), g.prec());
            Valuation v = series_vp(g, P);
            json j{{"P", format_poly(P)}, {"prec", g.prec()}};
            if (v == kInfinity)
                j["vp"] = "inf";
            else
                j["vp"] = v;
            emit(j, out_path);
            return kOk;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kInconsistent;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
