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

#ifndef DRINFELD_JSON_IO_HPP
#define DRINFELD_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "../../vendor/json.hpp"
#include "cusps.hpp"
#include "forms.hpp"
#include "identities.hpp"

namespace drinfeld {

using json = nlohmann::json;  // std::map objects: keys come out sorted

/// q = p^e for a prime p; throws otherwise.
inline std::pair<int, int> split_prime_power(int q) {
    if (q < 2) throw Error("q must be a prime power");
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw Error("q must be a prime power");
    return {p, e};
}

inline const Field* field_from_q(int q, const std::string& modulus = {}) {
    auto [p, e] = split_prime_power(q);
    return make_field(p, e, modulus);
}

inline void put_field(json& j, const Field* F) {
    j["q"] = F->q();
    if (!F->is_prime_field()) j["modulus"] = format_modulus(F);
}

inline const Field* field_from_json(const json& j) {
    if (!j.contains("q")) throw Error("missing field 'q'");
    return field_from_q(j.at("q").get<int>(), j.value("modulus", std::string()));
}

inline json coeffs_to_json(const USeries& f) {
    json arr = json::array();
    for (int i = 0; i < f.prec(); ++i) {
        if (f[i].is_zero()) continue;
        arr.push_back({{"exp", i}, {"num", format_poly(f[i].num())}, {"den", format_poly(f[i].den())}});
    }
    return arr;
}

inline USeries coeffs_from_json(const Field* F, const json& arr, int prec) {
    USeries f = useries_zero(F, prec);
    for (auto& c : arr) {
        int e = c.at("exp").get<int>();
        if (e < 0 || e >= prec) throw Error("coefficient exponent outside precision");
        Poly num = parse_poly(F, c.at("num").get<std::string>());
        Poly den = parse_poly(F, c.value("den", std::string("1")));
        f.coeff(e) = RatFunc(num, den);
    }
    return f;
}

inline json series_to_json(const USeries& f, const IdealA& level, WeightType wt) {
    json j;
    put_field(j, f.zero().field());
    j["var"] = "u";
    j["prec"] = f.prec();
    j["level"] = format_poly(level.gen());
    j["k"] = wt.k;
    j["m"] = wt.m;
    j["coeffs"] = coeffs_to_json(f);
    return j;
}

inline json form_to_json(const FormModel& f) {
    json j = series_to_json(f.exp_inf, f.level, f.wt);
    j["name"] = f.name;
    json al = json::object();
    for (auto& [d, s] : f.al_images) al[format_poly(d.gen())] = {{"prec", s.prec()}, {"coeffs", coeffs_to_json(s)}};
    j["al_images"] = al;
    return j;
}

/// Reads either a bare series or a form model.
inline FormModel form_from_json(const json& j) {
    const Field* F = field_from_json(j);
    if (j.value("var", std::string("u")) != "u") throw Error("only u-expansions are supported");
    int prec = j.at("prec").get<int>();
    FormModel f;
    f.name = j.value("name", std::string("f"));
    f.level = IdealA(parse_poly(F, j.value("level", std::string("1"))));
    f.wt = {j.value("k", 0), j.value("m", 0)};
    f.exp_inf = coeffs_from_json(F, j.at("coeffs"), prec);
    if (j.contains("al_images"))
        for (auto& [d, s] : j.at("al_images").items())
            f.al_images.emplace(IdealA(parse_poly(F, d)), coeffs_from_json(F, s.at("coeffs"), s.at("prec").get<int>()));
    return f;
}

inline json key_to_json(const CosetKey& k) {
    return {{"hnf", {format_poly(k.h_a), format_poly(k.h_b), format_poly(k.h_d)}},
            {"p1", {format_poly(k.p1.c), format_poly(k.p1.d)}}};
}

inline json table_to_json(const CanonicalOperator& op) {
    json terms = json::array();
    for (auto& [k, c] : op.table) {
        json t = key_to_json(k);
        t["coeff"] = format_ratfunc(c);
        terms.push_back(t);
    }
    return {{"domain", format_poly(op.domain.gen())}, {"k", op.wt.k}, {"m", op.wt.m}, {"terms", terms}};
}

inline json report_to_json(const IdentityReport& r) {
    json j{{"identity", r.identity}, {"params", r.params}, {"status", to_string(r.status)}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.status == Status::Fail) {
        if (r.lhs) j["lhs_table"] = table_to_json(*r.lhs);
        if (r.rhs) j["rhs_table"] = table_to_json(*r.rhs);
        json d = json::array();
        for (auto& x : r.diff) {
            json e = key_to_json(x.key);
            e["lhs"] = x.lhs ? format_ratfunc(*x.lhs) : "0";
            e["rhs"] = x.rhs ? format_ratfunc(*x.rhs) : "0";
            d.push_back(e);
        }
        j["diff"] = d;
    }
    return j;
}

inline json cusps_to_json(const IdealA& n) {
    const Field* F = n.gen().field();
    auto cs = enumerate_cusps(n);
    json j;
    put_field(j, F);
    j["level"] = format_poly(n.gen());
    json list = json::array();
    for (auto& c : cs) list.push_back({{"label", c.to_string()}, {"x", format_poly(c.x)}, {"y", format_poly(c.y)}});
    j["cusps"] = list;
    json perms = json::object();
    for (auto& d : n.exact_divisors()) {
        auto perm = al_permutation(al_representative(d, n), cs);
        json images = json::array();
        for (int i : perm) images.push_back(cs[i].to_string());
        perms[format_poly(d.gen())] = {{"images", images}, {"cycles", cycle_notation(perm)}};
    }
    j["atkin_lehner"] = perms;
    return j;
}

}  // namespace drinfeld

#endif
