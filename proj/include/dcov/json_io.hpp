#ifndef DCOV_JSON_IO_HPP
#define DCOV_JSON_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "dcov/bundle.hpp"
#include "dcov/poly.hpp"

namespace dcov {

using nlohmann::json;

inline json field_to_json(const FieldDesc& f) {
    if (f.kind == FieldKind::rational) return json("Q");
    return json{{"p", f.p}};
}

inline FieldDesc field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return rational_field();
        fail(ErrorCode::parse_error, "unknown field tag: " + j.get<std::string>());
    }
    if (j.is_object() && j.contains("p") && j["p"].is_number_integer() &&
        j["p"].get<long long>() > 0)
        return prime_field(j["p"].get<std::uint64_t>());
    fail(ErrorCode::parse_error, "field must be \"Q\" or {\"p\": prime}");
}

inline json ring_to_json(const RingCtx& r) {
    return json{{"vars", r.nvars}, {"weights", r.weights}, {"field", field_to_json(r.field)}};
}

inline RingCtx ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("weights") || !j.contains("field"))
        fail(ErrorCode::parse_error, "ring needs vars, weights and field");
    auto weights = j["weights"].get<std::vector<int>>();
    if (int(weights.size()) != j["vars"].get<int>())
        fail(ErrorCode::parse_error, "ring weight count does not match vars");
    return RingCtx(std::move(weights), field_from_json(j["field"]));
}

template <class F>
json poly_to_json(const PolyT<F>& p) {
    const F& f = p.field();
    json terms = json::array();
    for (const auto& t : p.terms()) {
        if constexpr (std::is_same_v<F, ZpField>)
            terms.push_back(json{{"e", t.e}, {"c", t.c}});
        else
            terms.push_back(json{{"e", t.e}, {"c", f.to_string(t.c)}});
    }
    return json{{"ring", ring_to_json(p.ring())}, {"terms", std::move(terms)}};
}

template <class F>
PolyT<F> poly_from_json_t(const json& j, const RingCtx& ring) {
    F f = field_from_desc<F>(ring.field);
    if (!j.contains("terms") || !j["terms"].is_array())
        fail(ErrorCode::parse_error, "polynomial needs a terms array");
    std::vector<typename PolyT<F>::Term> terms;
    for (const auto& tj : j["terms"]) {
        if (!tj.contains("e") || !tj.contains("c"))
            fail(ErrorCode::parse_error, "term needs exponents e and coefficient c");
        ExpVec e = tj["e"].get<ExpVec>();
        typename F::Elem c;
        if (tj["c"].is_string())
            c = f.parse(tj["c"].get<std::string>());
        else if (tj["c"].is_number_integer())
            c = f.from_int(tj["c"].get<long>());
        else
            fail(ErrorCode::parse_error, "coefficient must be an integer or a string");
        terms.push_back({std::move(e), std::move(c)});
    }
    return PolyT<F>::from_terms(ring, std::move(terms));
}

using AnyPoly = std::variant<PolyT<QField>, PolyT<ZpField>>;

inline AnyPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring"))
        fail(ErrorCode::parse_error, "polynomial needs a ring");
    RingCtx ring = ring_from_json(j["ring"]);
    if (ring.field.kind == FieldKind::rational) return poly_from_json_t<QField>(j, ring);
    return poly_from_json_t<ZpField>(j, ring);
}

template <class F>
json bundle_to_json(const Bundle<F>& b) {
    json polys = json::object();
    for (const auto& [role, p] : b.polys) polys[role] = poly_to_json(p);
    return json{{"bundle", json{{"name", b.name}, {"n", b.n}, {"d", b.d}, {"k", b.k}}},
                {"polys", std::move(polys)}};
}

inline json any_bundle_to_json(const AnyBundle& b) {
    return std::visit([](const auto& bb) { return bundle_to_json(bb); }, b);
}

template <class F>
Bundle<F> bundle_from_json_t(const json& j) {
    Bundle<F> b;
    const json& meta = j.at("bundle");
    b.name = meta.value("name", "");
    b.n = meta.value("n", -1);
    b.d = meta.value("d", -1);
    b.k = meta.value("k", -1);
    const RingCtx* ring = nullptr;
    RingCtx first;
    for (const auto& [role, pj] : j.at("polys").items()) {
        RingCtx r = ring_from_json(pj.at("ring"));
        if (!ring) {
            first = r;
            ring = &first;
        } else if (!(*ring == r)) {
            fail(ErrorCode::ring_mismatch, "bundle polynomials live in different rings");
        }
        b.polys.emplace(role, poly_from_json_t<F>(pj, r));
    }
    if (!ring) fail(ErrorCode::parse_error, "bundle has no polynomials");
    return b;
}

inline AnyBundle bundle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("bundle") || !j.contains("polys"))
        fail(ErrorCode::parse_error, "bundle needs a manifest and a polys object");
    const json& polys = j["polys"];
    if (!polys.is_object() || polys.empty())
        fail(ErrorCode::parse_error, "bundle has no polynomials");
    FieldDesc fd = field_from_json(polys.begin().value().at("ring").at("field"));
    if (fd.kind == FieldKind::rational) return bundle_from_json_t<QField>(j);
    return bundle_from_json_t<ZpField>(j);
}

inline json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::parse_error, "malformed JSON input");
    return j;
}

} // namespace dcov

#endif
