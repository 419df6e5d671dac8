#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "monopoly/domain_analysis.hpp"
#include "monopoly/errors.hpp"
#include "monopoly/exponent_vector.hpp"
#include "monopoly/monomial_series.hpp"
#include "monopoly/reinhardt_set.hpp"

namespace monopoly {

using json = nlohmann::json;

// Rationals serialize as {"num": ..., "den": ...}; plain JSON integers are
// accepted on input. Values beyond 64 bits fall back to decimal strings.
inline json rational_to_json(const Rational& r) {
    json j;
    const Int num = numerator(r), den = denominator(r);
    auto encode = [](const Int& v) -> json {
        if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
            return v.convert_to<std::int64_t>();
        return v.str();
    };
    j["num"] = encode(num);
    j["den"] = encode(den);
    return j;
}

inline Rational rational_from_json(const json& j) {
    auto decode = [](const json& v) -> Int {
        if (v.is_number_integer()) return Int(v.get<std::int64_t>());
        if (v.is_string()) return Int(v.get<std::string>());
        throw ConfigError("expected an integer or decimal string in a rational");
    };
    if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den"))
            throw ConfigError("rational object needs fields \"num\" and \"den\"");
        return Rational(decode(j["num"]), decode(j["den"]));
    }
    throw ConfigError("expected an integer or a {num, den} pair");
}

inline json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(to_int64(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ConfigError("matrix must be a nonempty array of integer rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw ConfigError("matrix rows must be arrays");
        std::vector<std::int64_t> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ConfigError("matrix entries must be integers");
            r.push_back(v.get<std::int64_t>());
        }
        rows.push_back(std::move(r));
    }
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw ConfigError("matrix must be square");
    return IntMatrix::from_rows(rows);
}

inline json rat_matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json exponent_vector_to_json(const ExponentVector& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(rational_to_json(v[i]));
    return a;
}

inline ExponentVector exponent_vector_from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("exponent vector must be an array");
    std::vector<Rational> e;
    for (const auto& v : j) e.push_back(rational_from_json(v));
    return ExponentVector(std::move(e));
}

inline json domain_analysis_to_json(const DomainAnalysis& an) {
    json j;
    j["B"] = int_matrix_to_json(an.B);
    j["Delta"] = int_matrix_to_json(an.Delta);
    json gcds = json::array();
    for (const auto& g : an.column_gcds) gcds.push_back(to_int64(g));
    j["columnGcds"] = std::move(gcds);
    j["A"] = int_matrix_to_json(an.A);
    j["C"] = rat_matrix_to_json(an.C);
    json ones = json::array();
    for (const auto& g : an.ones_A) ones.push_back(to_int64(g));
    j["onesA"] = std::move(ones);
    j["m"] = an.m;
    j["pStar"] = rational_to_json(an.p_star);
    j["qStar"] = an.q_star ? rational_to_json(*an.q_star) : json(nullptr);
    j["weightExponent"] = exponent_vector_to_json(an.weight_exponent);
    j["alphaCover"] = exponent_vector_to_json(an.alpha_cover);
    j["degree"] = to_int64(an.degree);
    j["trivial"] = an.trivial;
    j["rowPermutation"] = an.row_permutation;
    j["permutationAmbiguous"] = an.permutation_ambiguous;
    return j;
}

inline json reinhardt_set_to_json(const ReinhardtAngularSet& s) {
    json j;
    json radial = json::array();
    for (const auto& rc : s.radial()) {
        json c;
        c["c"] = exponent_vector_to_json(rc.c);
        c["bound"] = rc.bound;
        c["rel"] = rc.rel == RadialConstraint::Rel::lt ? "lt" : "ge";
        radial.push_back(std::move(c));
    }
    j["radial"] = std::move(radial);
    if (s.kappa0()) {
        json k = json::array();
        for (auto v : *s.kappa0()) k.push_back(v);
        j["angular"] = json{{"kappa0", std::move(k)}};
    }
    return j;
}

inline ReinhardtAngularSet reinhardt_set_from_json(const json& j, int dim) {
    ReinhardtAngularSet s(dim);
    if (j.contains("radial")) {
        for (const auto& c : j.at("radial")) {
            RadialConstraint rc;
            rc.c = exponent_vector_from_json(c.at("c"));
            if (c.at("bound").is_object() || c.at("bound").is_number_integer())
                rc.bound = to_double(rational_from_json(c.at("bound")));
            else
                rc.bound = c.at("bound").get<double>();
            const std::string rel = c.at("rel").get<std::string>();
            if (rel == "lt")
                rc.rel = RadialConstraint::Rel::lt;
            else if (rel == "ge")
                rc.rel = RadialConstraint::Rel::ge;
            else
                throw ConfigError("constraint relation must be \"lt\" or \"ge\"");
            s.add_radial(std::move(rc));
        }
    }
    if (j.contains("angular")) {
        std::vector<std::int64_t> k;
        for (const auto& v : j.at("angular").at("kappa0")) k.push_back(v.get<std::int64_t>());
        s.set_angular(std::move(k));
    }
    return s;
}

inline json monomial_series_to_json(const MonomialSeries& s) {
    json j;
    j["dimension"] = s.dim();
    j["truncationDegree"] = s.truncation_degree();
    json terms = json::array();
    for (const auto& [g, c] : s.terms()) {
        json t;
        t["gamma"] = g;
        t["coeff"] = json::array({c.real(), c.imag()});
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

} // namespace monopoly
