#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "flagvertex/flag.hpp"
#include "flagvertex/mirror.hpp"
#include "flagvertex/zseries.hpp"

namespace flagvertex {

using nlohmann::json;

// Schemas (all integers as decimal strings, round-trips are bit-exact):
//   exponent entry   [var_name, num, den]
//   term             {"exp": [entries...], "coeff": [num, den]}
//   LaurentPoly      {"vars": [names...], "terms": [terms...]}
//   RatFunc          {"vars": [names...], "num": [terms...], "den": [terms...]}
//   ZSeries          {"vars": [names...], "truncation": D,
//                     "coeffs": [{"zdeg": [ints...], "value": {"num":..,"den":..}}]}

inline json system_to_json(const VariableSystem& sys) {
    json names = json::array();
    for (int v = 0; v < sys.var_count(); ++v) names.push_back(sys.var_name(v));
    return names;
}

inline VariableSystem system_from_json(const json& names) {
    if (!names.is_array() || names.empty()) throw SchemaError("vars: expected a nonempty array");
    int count = static_cast<int>(names.size());
    if (count % 2 == 0) throw SchemaError("vars: unexpected variable count");
    int n = (count - 1) / 2;
    for (Side side : {Side::primal, Side::dual}) {
        VariableSystem sys = side == Side::primal ? VariableSystem::primal(n) : VariableSystem::dual(n);
        bool ok = true;
        for (int v = 0; v < count && ok; ++v)
            ok = names[static_cast<std::size_t>(v)].is_string() &&
                 names[static_cast<std::size_t>(v)].get<std::string>() == sys.var_name(v);
        if (ok) return sys;
    }
    throw SchemaError("vars: names do not match a known variable system");
}

inline json exp_to_json(const VariableSystem& sys, const ExpVec& e) {
    json out = json::array();
    for (int v = 0; v < sys.var_count(); ++v) {
        const Frac& x = e[static_cast<std::size_t>(v)];
        if (x.is_zero()) continue;
        out.push_back(json::array({sys.var_name(v), std::to_string(x.num), std::to_string(x.den)}));
    }
    return out;
}

inline ExpVec exp_from_json(const VariableSystem& sys, const json& j) {
    if (!j.is_array()) throw SchemaError("exp: expected an array");
    ExpVec e(static_cast<std::size_t>(sys.var_count()), Frac(0));
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 3) throw SchemaError("exp entry: expected [var,num,den]");
        auto v = sys.var_by_name(entry[0].get<std::string>());
        if (!v) throw SchemaError("exp entry: unknown variable '" + entry[0].get<std::string>() + "'");
        Frac x(std::stoll(entry[1].get<std::string>()), std::stoll(entry[2].get<std::string>()));
        e[static_cast<std::size_t>(*v)] = x;
    }
    return e;
}

inline json coeff_to_json(const Rational& c) {
    return json::array({rational_num(c).str(), rational_den(c).str()});
}

inline Rational coeff_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw SchemaError("coeff: expected [num,den]");
    Int num(j[0].get<std::string>());
    Int den(j[1].get<std::string>());
    if (den == 0) throw SchemaError("coeff: zero denominator");
    return Rational(num, den);
}

inline json terms_to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(json{{"exp", exp_to_json(p.system(), e)}, {"coeff", coeff_to_json(c)}});
    return out;
}

inline LaurentPoly terms_from_json(const VariableSystem& sys, const json& j) {
    if (!j.is_array()) throw SchemaError("terms: expected an array");
    LaurentPoly p(sys);
    for (const auto& term : j) {
        if (!term.contains("exp") || !term.contains("coeff")) throw SchemaError("term: missing exp/coeff");
        p.add_term(exp_from_json(sys, term["exp"]), coeff_from_json(term["coeff"]));
    }
    return p;
}

inline json to_json(const LaurentPoly& p) {
    return json{{"vars", system_to_json(p.system())}, {"terms", terms_to_json(p)}};
}

inline LaurentPoly laurent_from_json(const json& j) {
    if (!j.contains("vars") || !j.contains("terms")) throw SchemaError("LaurentPoly: missing vars/terms");
    VariableSystem sys = system_from_json(j["vars"]);
    return terms_from_json(sys, j["terms"]);
}

inline json to_json(const RatFunc& f) {
    return json{{"vars", system_to_json(f.system())},
                {"num", terms_to_json(f.num())},
                {"den", terms_to_json(f.den())}};
}

inline RatFunc ratfunc_from_json(const json& j) {
    if (!j.contains("vars") || !j.contains("num") || !j.contains("den"))
        throw SchemaError("RatFunc: missing vars/num/den");
    VariableSystem sys = system_from_json(j["vars"]);
    return RatFunc(terms_from_json(sys, j["num"]), terms_from_json(sys, j["den"]));
}

inline json to_json(const ZSeries& s) {
    json coeffs = json::array();
    for (const auto& [d, v] : s.coeffs())
        coeffs.push_back(json{{"zdeg", d}, {"value", json{{"num", terms_to_json(v.num())}, {"den", terms_to_json(v.den())}}}});
    return json{{"vars", system_to_json(s.system())}, {"truncation", s.truncation()}, {"coeffs", coeffs}};
}

inline ZSeries zseries_from_json(const json& j) {
    if (!j.contains("vars") || !j.contains("truncation") || !j.contains("coeffs"))
        throw SchemaError("ZSeries: missing vars/truncation/coeffs");
    VariableSystem sys = system_from_json(j["vars"]);
    ZSeries out(sys, j["truncation"].get<int>());
    for (const auto& entry : j["coeffs"]) {
        if (!entry.contains("zdeg") || !entry.contains("value")) throw SchemaError("ZSeries coeff: missing zdeg/value");
        ZDeg d = entry["zdeg"].get<ZDeg>();
        const json& v = entry["value"];
        out.set_coeff(d, RatFunc(terms_from_json(sys, v["num"]), terms_from_json(sys, v["den"])));
    }
    return out;
}

inline json to_json(const FixedPoint& p) { return json(p.one_line()); }

inline FixedPoint fixed_point_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("fixed point: expected an integer array");
    return FixedPoint(j.get<std::vector<int>>());
}

inline json to_json(const Slope& s) {
    json out = json::array();
    for (const Frac& x : s.s) out.push_back(x.str());
    return out;
}

inline Slope slope_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("slope: expected an array of fractions");
    std::vector<Frac> v;
    for (const auto& e : j) v.push_back(frac_from_string(e.get<std::string>()));
    return Slope(std::move(v));
}

} // namespace flagvertex
