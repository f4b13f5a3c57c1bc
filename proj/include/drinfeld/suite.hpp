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

#ifndef DRINFELD_SUITE_HPP
#define DRINFELD_SUITE_HPP

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace drinfeld {

/// Malformed configuration; the CLI maps this to exit code 2.
class ConfigError : public Error {
   public:
    using Error::Error;
};

struct FieldSpec {
    int q = 0;
    std::string modulus;
    std::vector<std::string> pi, P;  // per-field overrides of the grid lists
};

struct SuiteConfig {
    std::vector<FieldSpec> fields;
    std::vector<std::string> pi, P, d;
    std::vector<WeightType> weights;
    std::vector<std::string> identities;  // empty: the whole catalog
    int precision = 30;
    std::string output;
    UpBackend backend = UpBackend::Goss;
    int random_al = 0;  // extra runs with randomized Atkin-Lehner matrices
    unsigned long long seed = 1;
    std::string perturb;  // identity whose left side gets corrupted
    int workers = 1;
    json echo;
};

namespace detail {

template <class T>
std::vector<T> list_of(const json& j, const char* key) {
    std::vector<T> out;
    if (!j.contains(key)) return out;
    const json& v = j.at(key);
    if (v.is_array())
        for (auto& x : v) out.push_back(x.get<T>());
    else
        out.push_back(v.get<T>());
    return out;
}

}  // namespace detail

inline SuiteConfig parse_config(const json& j) {
    try {
        static const std::set<std::string> known{"field",    "fields",  "pi",     "P",    "d",       "weights",
                                                 "k",        "m",       "identities", "precision", "output",
                                                 "backend",  "random_al", "seed", "perturb", "workers"};
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        for (auto& [k, v] : j.items())
            if (!known.count(k)) throw ConfigError("unknown config key '" + k + "'");
        SuiteConfig c;
        c.echo = j;
        auto read_field = [](const json& f) {
            FieldSpec s;
            if (f.is_number_integer()) {
                s.q = f.get<int>();
            } else {
                if (f.contains("q"))
                    s.q = f.at("q").get<int>();
                else
                    s.q = static_cast<int>(ipow(f.at("p").get<int>(), f.value("e", 1)));
                s.modulus = f.value("modulus", std::string());
                s.pi = detail::list_of<std::string>(f, "pi");
                s.P = detail::list_of<std::string>(f, "P");
            }
            return s;
        };
        if (j.contains("field")) c.fields.push_back(read_field(j.at("field")));
        if (j.contains("fields"))
            for (auto& f : j.at("fields")) c.fields.push_back(read_field(f));
        if (c.fields.empty()) throw ConfigError("config needs 'field' or 'fields'");
        c.pi = detail::list_of<std::string>(j, "pi");
        c.P = detail::list_of<std::string>(j, "P");
        c.d = detail::list_of<std::string>(j, "d");
        for (auto& f : c.fields)
            if ((c.pi.empty() && f.pi.empty()) || (c.P.empty() && f.P.empty()))
                throw ConfigError("config needs 'pi' and 'P'");
        if (j.contains("weights")) {
            for (auto& w : j.at("weights")) {
                if (!w.is_array() || w.size() != 2) throw ConfigError("weights are [k, m] pairs");
                c.weights.push_back({w[0].get<int>(), w[1].get<int>()});
            }
        } else {
            for (int k : detail::list_of<int>(j, "k"))
                for (int m : detail::list_of<int>(j, "m")) c.weights.push_back({k, m});
        }
        if (c.weights.empty()) throw ConfigError("config needs 'weights' or 'k' and 'm'");
        c.identities = detail::list_of<std::string>(j, "identities");
        auto names = identity_names();
        for (auto& n : c.identities)
            if (std::find(names.begin(), names.end(), n) == names.end())
                throw ConfigError("unknown identity '" + n + "'");
        c.precision = j.value("precision", 30);
        c.output = j.value("output", std::string());
        std::string b = j.value("backend", std::string("goss"));
        if (b == "goss")
            c.backend = UpBackend::Goss;
        else if (b == "cyclotomic")
            c.backend = UpBackend::Cyclotomic;
        else
            throw ConfigError("backend must be 'goss' or 'cyclotomic'");
        c.random_al = j.value("random_al", 0);
        c.seed = j.value("seed", 1ULL);
        c.perturb = j.value("perturb", std::string());
        if (!c.perturb.empty() && std::find(names.begin(), names.end(), c.perturb) == names.end())
            throw ConfigError("unknown identity '" + c.perturb + "' to perturb");
        c.workers = std::max(1, j.value("workers", 1));
        return c;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
}

struct GridTuple {
    IdentityParams params;
    std::map<std::string, std::string> echo;
};

struct SkippedTuple {
    std::map<std::string, std::string> tuple;
    std::string reason;
};

struct Grid {
    std::vector<GridTuple> tuples;
    std::vector<SkippedTuple> skipped;
    std::vector<std::string> warnings;
};

/**
 * Expands the config into validated tuples. Invalid combinations are kept
 * as skipped entries with a reason; duplicates (a literal read the same
 * way over a small field) are merged.
 */
inline Grid expand_grid(const SuiteConfig& c) {
    Grid g;
    std::set<std::string> seen;
    for (auto& fs : c.fields) {
        const Field* F;
        try {
            F = field_from_q(fs.q, fs.modulus);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("bad field: ") + e.what());
        }
        auto lit = [&](const std::string& s) {
            try {
                return parse_poly(F, s);
            } catch (const std::exception& e) {
                throw ConfigError("bad polynomial '" + s + "': " + e.what());
            }
        };
        const auto& pis_list = fs.pi.empty() ? c.pi : fs.pi;
        const auto& Ps_list = fs.P.empty() ? c.P : fs.P;
        for (auto& pis : pis_list)
            for (auto& Ps : Ps_list)
                for (auto& wt : c.weights) {
                    std::vector<std::optional<std::string>> ds;
                    if (c.d.empty())
                        ds.push_back(std::nullopt);
                    else
                        for (auto& x : c.d) ds.push_back(x);
                    for (auto& ds1 : ds) {
                        Poly pi = lit(pis), P = lit(Ps);
                        std::map<std::string, std::string> echo{{"q", std::to_string(F->q())},
                                                                {"pi", format_poly(pi)},
                                                                {"P", format_poly(P)},
                                                                {"k", std::to_string(wt.k)},
                                                                {"m", std::to_string(wt.m)}};
                        if (!F->is_prime_field()) echo["modulus"] = format_modulus(F);
                        std::optional<Poly> d;
                        if (ds1) {
                            d = lit(*ds1);
                            echo["d"] = format_poly(*d);
                        }
                        std::string id = json(echo).dump();
                        if (!seen.insert(id).second) continue;
                        std::string why;
                        if (pi.is_zero() || !pi.is_monic())
                            why = "pi must be monic";
                        else if (P.degree() < 1 || !P.is_monic() || !is_irreducible(P))
                            why = "P is not a monic prime";
                        else if (!gcd(pi, P).is_one())
                            why = "hypothesis (pi,P)=1";
                        else if (d && (d->is_zero() || !d->is_monic() ||
                                       !IdealA(*d).exactly_divides(IdealA(pi) * IdealA(P))))
                            why = "d is not an exact divisor of pi*P";
                        if (!why.empty()) {
                            g.skipped.push_back({echo, why});
                            continue;
                        }
                        for (auto& w : wt.warnings(F->q())) g.warnings.push_back(id + ": " + w);
                        g.tuples.push_back({{F, pi, P, wt, d}, echo});
                    }
                }
    }
    return g;
}

struct SuiteSummary {
    int pass = 0, fail = 0, not_applicable = 0, skipped = 0;
};

struct SuiteResult {
    std::vector<IdentityReport> reports;
    Grid grid;
    SuiteSummary summary;
    double wall_seconds = 0;
    json report;
    bool failed() const { return summary.fail > 0; }
};

namespace detail {

inline std::vector<IdentityReport> run_tuple(const SuiteConfig& c, const GridTuple& t) {
    auto names = c.identities.empty() ? identity_names() : c.identities;
    std::vector<IdentityReport> out;
    const int runs = 1 + c.random_al;
    for (int run = 0; run < runs; ++run) {
        ALProvider al = default_al_provider();
        if (run > 0) {
            // distinct deterministic streams per tuple and run
            std::size_t h = std::hash<std::string>{}(json(t.echo).dump());
            al = RandomALProvider(c.seed * 1000003ULL + h * 31ULL + static_cast<unsigned long long>(run));
        }
        for (auto& n : names) {
            CaseMutator mut;
            if (run == 0 && n == c.perturb) mut = perturb_first_coefficient;
            auto rs = verify_identity(n, t.params, al, mut);
            for (auto& r : rs) {
                if (run > 0) r.params["al_run"] = std::to_string(run);
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

}  // namespace detail

inline SuiteResult run_suite(const SuiteConfig& c) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult res;
    res.grid = expand_grid(c);
    const auto& tuples = res.grid.tuples;
    std::vector<std::vector<IdentityReport>> per(tuples.size());
    // simple pool: each worker takes every w-th tuple
    std::vector<std::future<void>> fut;
    const int W = std::min<int>(c.workers, std::max<int>(1, static_cast<int>(tuples.size())));
    for (int w = 0; w < W; ++w)
        fut.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < tuples.size(); i += W) per[i] = detail::run_tuple(c, tuples[i]);
        }));
    for (auto& f : fut) f.get();
    for (auto& v : per)
        for (auto& r : v) res.reports.push_back(std::move(r));
    std::vector<json> rows;
    for (auto& r : res.reports) {
        switch (r.status) {
            case Status::Pass: ++res.summary.pass; break;
            case Status::Fail: ++res.summary.fail; break;
            case Status::NotApplicable: ++res.summary.not_applicable; break;
        }
        rows.push_back(report_to_json(r));
    }
    std::sort(rows.begin(), rows.end(), [](const json& a, const json& b) { return a.dump() < b.dump(); });
    std::vector<json> skipped;
    for (auto& s : res.grid.skipped) skipped.push_back({{"tuple", s.tuple}, {"reason", "skipped: " + s.reason}});
    std::sort(skipped.begin(), skipped.end(), [](const json& a, const json& b) { return a.dump() < b.dump(); });
    res.summary.skipped = static_cast<int>(skipped.size());
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto warnings = res.grid.warnings;
    std::sort(warnings.begin(), warnings.end());
    warnings.erase(std::unique(warnings.begin(), warnings.end()), warnings.end());
    res.report = {{"version", 1},
                  {"config", c.echo},
                  {"results", rows},
                  {"skipped", skipped},
                  {"warnings", warnings},
                  {"summary",
                   {{"pass", res.summary.pass},
                    {"fail", res.summary.fail},
                    {"not_applicable", res.summary.not_applicable},
                    {"skipped", res.summary.skipped},
                    {"wall_time_s", res.wall_seconds}}}};
    return res;
}

}  // namespace drinfeld

#endif
