#pragma once

// JSON serialization of the exact types.  Rationals cross the boundary as
// "p/q" strings so no precision is lost; polynomials use the canonical
// graded-lex term order, so serialized forms are reproducible byte-for-byte.

#include <json.hpp>

#include <string>
#include <vector>

#include "factored_rational.hpp"
#include "multipoly.hpp"
#include "projection_model.hpp"
#include "ratmatrix.hpp"
#include "spectral.hpp"
#include "weights.hpp"

namespace cosgr {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const FactoredRational& f) {
    json factors = json::array();
    for (const auto& [root, mult] : f.factors())
        factors.push_back({{"root", root.to_string()}, {"mult", mult}});
    return {{"unit", f.unit().to_string()}, {"factors", factors}};
}

inline FactoredRational factored_from_json(const json& j) {
    FactoredRational f(Rational::from_string(j.at("unit").get<std::string>()));
    for (const auto& t : j.at("factors"))
        f *= FactoredRational::linear(Rational::from_string(t.at("root").get<std::string>()),
                                      t.at("mult").get<int>());
    return f;
}

inline json spectrum_record(const Signature& sig, const HighestWeight& m,
                            const FactoredRational& c) {
    json rec = to_json(c);
    rec["n"] = sig.n;
    rec["i"] = sig.i;
    rec["r"] = sig.r;
    rec["m"] = m.parts;
    return rec;
}

inline json to_json(const MultiPoly& p, const std::vector<std::string>& names) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exps", e}, {"coef", c.to_string()}});
    return {{"vars", names}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const json& j) {
    int nvars = static_cast<int>(j.at("vars").size());
    MultiPoly p(nvars);
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exps").get<std::vector<int>>(),
                   Rational::from_string(t.at("coef").get<std::string>()));
    return p;
}

// dense exact matrix as rows of "p/q" strings
inline json to_json(const RatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline RatMatrix matrix_from_json(const json& j) {
    RatMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& rows = j.at("entries");
    for (int i = 0; i < m.rows(); ++i)
        for (int jj = 0; jj < m.cols(); ++jj)
            m.at(i, jj) = Rational::from_string(rows[i][jj].get<std::string>());
    return m;
}

inline json to_json(const IsotypicComponent& comp) {
    json fp = json::array();
    for (const auto& v : comp.fingerprint_exact) fp.push_back(v.to_string());
    return {{"m", comp.label.parts}, {"dim", comp.dim}, {"fingerprint", fp}};
}

inline std::vector<std::string> z_variable_names(int r) {
    std::vector<std::string> names;
    for (int t = 1; t <= r; ++t) names.push_back("z" + std::to_string(t));
    return names;
}

inline std::vector<std::string> projection_variable_names(int n) {
    std::vector<std::string> names;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            names.push_back("q" + std::to_string(a) + std::to_string(b));
    return names;
}

}  // namespace cosgr
