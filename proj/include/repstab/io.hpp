#pragma once

#include "repstab/charpoly.hpp"
#include "repstab/fistab.hpp"
#include "repstab/gamma.hpp"
#include "repstab/partition.hpp"
#include "repstab/symchar.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <string>

namespace repstab::io {

/****************************************************************************

  JSON forms.

    Partition       "[2,1]"; empty is "[]"
    IrrDecomp       {"rank": 4, "terms": {"[3,1]": 1, ...}}
    CharPolynomial  {"monomials": [{"exps": [..], "coeff": "p/q"}, ...]}
    CharacterTable  {"rank": s, "classes": ["[..]", ...], "table": {"[..]": [values]}}
    SpectralGrid    {"page": k, "p_max": .., "q_max": .., "entries": [{p, q, injectivity,
                     surjectivity, weight}]}; an unknown degree is "*"

  Integers that fit in 64 bits are JSON numbers, larger ones are strings.

 ****************************************************************************/

using nlohmann::json;

inline json to_json(const Integer& z) {
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
        return z.convert_to<long long>();
    return z.str();
}

inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw DomainError(ErrorKind::InvalidArgument, "expected an integer, got " + j.dump());
}

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw DomainError(ErrorKind::InvalidArgument, "expected a rational, got " + j.dump());
    const std::string text = j.get<std::string>();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw DomainError(ErrorKind::InvalidArgument, "bad rational '" + text + "'");
    }
}

inline json to_json(const Partition& p) { return p.str(); }

inline Partition partition_from_json(const json& j) {
    if (!j.is_string()) throw DomainError(ErrorKind::InvalidPartition, "expected a partition string, got " + j.dump());
    return parse_partition(j.get<std::string>());
}

inline json to_json(const IrrDecomp& d) {
    json terms = json::object();
    for (const auto& [lambda, mult] : d.terms()) terms[lambda.str()] = to_json(mult);
    return {{"rank", d.rank()}, {"terms", terms}};
}

inline IrrDecomp decomp_from_json(const json& j) {
    IrrDecomp out(j.at("rank").get<int>());
    for (const auto& [key, mult] : j.at("terms").items()) out.add(parse_partition(key), integer_from_json(mult));
    return out;
}

inline json to_json(const ClassFunction& f) {
    json values = json::object();
    for (const auto& [type, value] : f.values()) values[type.str()] = to_json(value);
    return {{"rank", f.rank()}, {"values", values}};
}

inline json to_json(const CharPolynomial& f) {
    json monomials = json::array();
    for (const auto& [exps, coeff] : f.terms()) monomials.push_back({{"exps", exps}, {"coeff", to_json(coeff)}});
    return {{"monomials", monomials}};
}

inline CharPolynomial charpoly_from_json(const json& j) {
    CharPolynomial out;
    for (const auto& m : j.at("monomials")) out.add_term(m.at("exps").get<Exponents>(), rational_from_json(m.at("coeff")));
    return out;
}

inline json to_json(const UnivariatePolynomial& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return {{"coeffs", coeffs}, {"text", f.str()}};
}

inline json to_json(const CharacterTable& t) {
    json classes = json::array();
    for (const auto& c : t.classes) classes.push_back(c.str());
    json table = json::object();
    for (const auto& [lambda, row] : t.rows) {
        json values = json::array();
        for (const auto& v : row) values.push_back(to_json(v));
        table[lambda.str()] = values;
    }
    return {{"rank", t.rank}, {"classes", classes}, {"table", table}};
}

inline json to_json(const ExtInt& e) { return e.known() ? json(e.value()) : json("*"); }

inline json to_json(const StabilityType& t) {
    return {{"injectivity", to_json(t.injectivity)}, {"surjectivity", to_json(t.surjectivity)}};
}

inline json to_json(const FIExpr& e) {
    json terms = json::array();
    for (const auto& t : e.terms()) terms.push_back({{"coeff", t.coeff.str()}, {"lambda", t.lambda.str()}});
    return {{"kind", e.kind() == FIExpr::Kind::FreeSum ? "free" : "irreducible"},
            {"terms", terms},
            {"weight_bound", e.weight_bound()},
            {"stability_type", to_json(e.stype())}};
}

inline json to_json(const SpectralGrid& g) {
    json entries = json::array();
    for (int p = 0; p <= g.p_max(); ++p)
        for (int q = 0; q <= g.q_max(); ++q) {
            const GridEntry& e = g.at(p, q);
            entries.push_back({{"p", p},
                               {"q", q},
                               {"injectivity", to_json(e.type.injectivity)},
                               {"surjectivity", to_json(e.type.surjectivity)},
                               {"weight", e.weight_bound}});
        }
    return {{"page", g.page()}, {"p_max", g.p_max()}, {"q_max", g.q_max()}, {"entries", entries}};
}

inline json to_json(const gamma::StableDecomp& d) {
    json terms = json::object();
    for (const auto& [lambda, mult] : d.terms) terms[lambda.str()] = to_json(mult);
    return {{"terms", terms}, {"valid_from", d.valid_from}};
}

}  // namespace repstab::io
