#pragma once

#include <json.hpp>

#include "periods/extract.hpp"

namespace periods {

using Json = nlohmann::ordered_json;

// Wire formats: rationals as "p/q", quadratic elements as
// {"a":"p/q","b":"r/s","D":n}, series as {"prec":P,"coeffs":[...]}.

inline Json scalar_json(const Rational& r) { return r.str_slash(); }

inline Json scalar_json(const Quad& q) {
    if (q.is_rational()) return q.a().str_slash();
    return Json{{"a", q.a().str_slash()}, {"b", q.b().str_slash()}, {"D", q.d()}};
}

template <class K>
Json qseries_json(const QSeries<K>& s) {
    Json coeffs = Json::array();
    for (long n = 0; n < s.prec(); ++n) coeffs.push_back(scalar_json(s.coeff(n)));
    return Json{{"prec", s.prec()}, {"coeffs", coeffs}};
}

inline Json head_json(const BiR& head) {
    Json out = Json::array();
    for (auto& [ij, c] : head.terms())
        out.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"c", scalar_json(c)}});
    return out;
}

inline Json slice_json(long N, long k, const BiR& head, const BiQ& body) {
    Json coeffs = Json::array();
    for (auto& [ij, s] : body.terms())
        coeffs.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"qseries", qseries_json(s)}});
    return Json{{"N", N}, {"k", k}, {"head", head_json(head)}, {"coeffs", coeffs}};
}

inline Json record_json(const EigenformRecord& rec) {
    Json eps = Json::object();
    for (auto& [p, s] : rec.eps) eps[std::to_string(p)] = s;
    Json q = Json::array();
    for (long n = 0; n < rec.q.prec(); ++n) q.push_back(scalar_json(rec.q.coeff(n)));
    Json out;
    out["N"] = rec.N;
    out["k"] = rec.k;
    out["eps"] = eps;
    out["D"] = rec.D == 0 ? Json(nullptr) : Json(rec.D);
    out["q"] = q;
    out["P"] = render_poly(rec.P, "X");
    out["Q"] = render_poly(rec.Q, "Y");
    return out;
}

} // namespace periods
