#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fermconic/multipoly.hpp"
#include "fermconic/prime_field.hpp"
#include "fermconic/rational.hpp"

namespace fermconic {

using Json = nlohmann::json;

/// Schema: { "vars": [names], "terms": [ { "e": [exponents], "c": "num/den" } ] },
/// terms in canonical (descending grevlex) order. Prime-field coefficients
/// serialize as decimal strings with a sibling "modulus" field.
inline Json to_json(const MultiPoly<Rational>& p) {
    Json j;
    j["vars"] = p.vars()->names();
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json e = Json::array();
        for (size_t i = 0; i < p.vars()->size(); ++i) e.push_back(t.m.exp(i));
        terms.push_back(Json{{"e", e}, {"c", t.c.to_string()}});
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Json to_json(const MultiPoly<Fp>& p, std::uint64_t modulus) {
    Json j;
    j["vars"] = p.vars()->names();
    j["modulus"] = modulus;
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json e = Json::array();
        for (size_t i = 0; i < p.vars()->size(); ++i) e.push_back(t.m.exp(i));
        terms.push_back(Json{{"e", e}, {"c", t.c.to_string()}});
    }
    j["terms"] = std::move(terms);
    return j;
}

inline MultiPoly<Rational> rational_poly_from_json(const Json& j) {
    if (!j.contains("vars") || !j.contains("terms")) throw ParseError("poly json: missing vars/terms");
    auto vars = make_vars(j["vars"].get<std::vector<std::string>>());
    std::vector<typename MultiPoly<Rational>::Term> terms;
    for (const auto& tj : j["terms"]) {
        Monomial m;
        auto evec = tj["e"].get<std::vector<unsigned>>();
        if (evec.size() != vars->size()) throw ParseError("poly json: exponent arity mismatch");
        for (size_t i = 0; i < evec.size(); ++i) m.set(i, evec[i]);
        terms.push_back({m, Rational::from_string(tj["c"].get<std::string>())});
    }
    return MultiPoly<Rational>::from_terms(vars, std::move(terms), Rational());
}

inline MultiPoly<Fp> fp_poly_from_json(const Json& j) {
    if (!j.contains("modulus")) throw ParseError("poly json: missing modulus");
    std::uint64_t p = j["modulus"].get<std::uint64_t>();
    auto vars = make_vars(j["vars"].get<std::vector<std::string>>());
    std::vector<typename MultiPoly<Fp>::Term> terms;
    for (const auto& tj : j["terms"]) {
        Monomial m;
        auto evec = tj["e"].get<std::vector<unsigned>>();
        if (evec.size() != vars->size()) throw ParseError("poly json: exponent arity mismatch");
        for (size_t i = 0; i < evec.size(); ++i) m.set(i, evec[i]);
        terms.push_back({m, Fp(std::stoull(tj["c"].get<std::string>()), p)});
    }
    return MultiPoly<Fp>::from_terms(vars, std::move(terms), Fp(0, p));
}

}  // namespace fermconic
