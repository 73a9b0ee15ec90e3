#pragma once

#include <json.hpp>

#include "capelli/group_algebra.hpp"
#include "capelli/poly.hpp"
#include "capelli/ratfunc.hpp"
#include "capelli/tensor_matrix.hpp"
#include "capelli/ugl.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

// Canonical JSON forms: rationals as "p/q" strings (q omitted when 1),
// polynomials as coefficient arrays lowest degree first, rational
// functions as {"num": [...], "den": [...]}; group-algebra elements as
// lists of {"perm", "coeff"} sorted lexicographically by image sequence.
// Term maps are ordered, so output is byte-stable across runs.
using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

inline Json to_json(const RationalFunction& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

template <typename C>
Json to_json(const GroupAlgebraElement<C>& x) {
    Json arr = Json::array();
    for (const auto& [p, c] : x.terms())
        arr.push_back(Json{{"perm", p.images()}, {"coeff", to_json(c)}});
    return arr;
}

inline Json to_json(const PbwMonomial& m) {
    Json arr = Json::array();
    for (const auto& f : m.factors()) arr.push_back(Json::array({f[0], f[1], f[2]}));
    return arr;
}

inline Json to_json(const UglElement& x) {
    Json arr = Json::array();
    for (const auto& [m, c] : x.terms())
        arr.push_back(Json{{"mono", to_json(m)}, {"coeff", c.str()}});
    return arr;
}

inline Json to_json(const Poly<UglElement>& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

template <typename A>
Json to_json(const TensorMatrix<A>& m) {
    Json arr = Json::array();
    for (const auto& [k, v] : m.entries())
        arr.push_back(Json{{"row", m.decode(k.first)}, {"col", m.decode(k.second)},
                           {"entry", to_json(v)}});
    return arr;
}

inline Json to_json(const WeylElement& x) {
    Json arr = Json::array();
    for (const auto& [k, c] : x.terms()) {
        Json xg = Json::array(), dg = Json::array();
        for (auto e : k.x) xg.push_back(static_cast<int>(e));
        for (auto e : k.d) dg.push_back(static_cast<int>(e));
        arr.push_back(Json{{"x", xg}, {"d", dg}, {"coeff", c.str()}});
    }
    return arr;
}

Rational rational_from_json(const Json& j);
GroupAlgebraElement<Rational> group_algebra_from_json(const Json& j, int degree);

}  // namespace capelli
