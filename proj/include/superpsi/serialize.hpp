/*
   Copyright 2026 The superpsi authors

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

#ifndef SUPERPSI_SERIALIZE_HPP
#define SUPERPSI_SERIALIZE_HPP

#include <json.hpp>

#include "decision.hpp"
#include "psido.hpp"

namespace superpsi {

using nlohmann::json;

inline void to_json(json& j, const Rational& r) { j = r.str(); }

inline void from_json(const json& j, Rational& r) {
    if (j.is_string()) r = Rational::parse(j.get<std::string>());
    else if (j.is_number_integer()) r = Rational(j.get<long>());
    else throw parse_error("rational must be a \"p/q\" string, got " + j.dump());
}

inline void to_json(json& j, const FieldValue& v) {
    j = json{{"a", fa(v)}, {"b", fb(v)}, {"c", fc(v)}, {"d", fd(v)}};
}

inline void from_json(const json& j, FieldValue& v) {
    auto get = [&](const char* k) { return j.contains(k) ? j.at(k).get<Rational>() : Rational(0); };
    v = makeField(get("a"), get("b"), get("c"), get("d"));
}

template <class K>
void to_json(json& j, const SuperPoly<K>& f) {
    j = json{{"even", f.even()}, {"odd", f.odd()}};
}

template <class K>
void from_json(const json& j, SuperPoly<K>& f) {
    f = SuperPoly<K>(j.at("even").get<std::vector<K>>(), j.at("odd").get<std::vector<K>>());
}

template <class K>
void to_json(json& j, const PsiSymbol<K>& T) {
    j = json{{"lambda", T.lambda}, {"mu", T.mu}, {"order2", T.order2}, {"parity", T.parity}, {"coeffs", T.coeffs}};
}

template <class K>
void from_json(const json& j, PsiSymbol<K>& T) {
    T.lambda = j.at("lambda").get<K>();
    T.mu = j.at("mu").get<K>();
    T.order2 = j.at("order2").get<K>();
    T.parity = j.at("parity").get<int>();
    T.coeffs = j.at("coeffs").get<std::vector<SuperPoly<K>>>();
}

inline void to_json(json& j, const ModuleSpec& s) {
    j = json{{"lambda", s.lambda}, {"mu", s.mu}, {"k", s.k}, {"p", s.p}, {"l", s.l}, {"lacunary", s.lacunary}};
}

inline void from_json(const json& j, ModuleSpec& s) {
    if (!j.is_object()) throw invalid_spec("module spec must be a JSON object");
    for (const char* key : {"lambda", "mu", "k", "p", "l"})
        if (!j.contains(key)) throw invalid_spec(std::string("module spec lacks \"") + key + "\"");
    s.lambda = j.at("lambda").get<Rational>();
    s.mu = j.at("mu").get<Rational>();
    s.k = j.at("k").get<Rational>();
    s.p = j.at("p").get<int>();
    s.l = j.at("l").get<int>();
    s.lacunary = j.value("lacunary", false);
    s.validate();
}

inline void to_json(json& j, const Verdict& v) {
    json cert = json::object();
    if (!v.eRatios.empty()) {
        json e = json::object();
        for (auto& [i2, r] : v.eRatios) e[Rational(i2, 2).str()] = r;
        cert["eRatios"] = e;
    }
    if (!v.violated.empty()) cert["violated"] = v.violated;
    j = json{{"equivalent", v.equivalent},
             {"parity", v.parity ? json(*v.parity) : json(nullptr)},
             {"certificate", cert},
             {"provenance", v.provenance},
             {"outOfScope", v.outOfScope},
             {"exploratory", v.exploratory},
             {"flags", v.flags}};
}

inline void from_json(const json& j, Verdict& v) {
    v = Verdict{};
    v.equivalent = j.at("equivalent").get<bool>();
    if (!j.at("parity").is_null()) v.parity = j.at("parity").get<int>();
    const json& cert = j.at("certificate");
    if (cert.contains("eRatios"))
        for (auto& [k, r] : cert.at("eRatios").items())
            v.eRatios[static_cast<int>((Rational::parse(k) * 2).to_long())] = r.get<Rational>();
    v.violated = cert.value("violated", std::string());
    v.provenance = j.value("provenance", std::vector<std::string>{});
    v.outOfScope = j.value("outOfScope", false);
    v.exploratory = j.value("exploratory", false);
    v.flags = j.value("flags", std::vector<std::string>{});
}

inline json bMatrixJson(const ModuleSpec& s, const std::vector<BEdge>& edges) {
    json entries = json::array();
    for (auto& e : edges)
        entries.push_back({{"i", Rational(e.i2, 2)}, {"j", Rational(e.j2, 2)}, {"parity", e.q}, {"b", e.b}});
    return {{"spec", s}, {"entries", entries}};
}

// rational when possible, otherwise the field element c * gamma^{1/2} on the branch s
inline json invariantJson(const InvariantValue& v, const GammaPoint& pt) {
    if (!v.defined) return nullptr;
    if (!v.sqrt3parity) return v.value;
    return FieldValue(GaussianRational(v.value)) * pt.gammaHalf();
}

}  // namespace superpsi

#endif
