// JSON encodings of the library's value types, shared by the CLI and the
// verification suites. Formats:
//   monoid     {"dim": d, "generators": [[int,...], ...]}
//   extension  {"sub": <monoid>, "super": <monoid>}
//   ideal      {"host": <monoid>, "generators": [[int,...], ...]}  ([] empty)
//   algebra    {"ring": "Z/4", "monoid": <monoid>, "ideal": <ideal-gens>}
//   element    {"algebra": <algebra>, "terms": [{"coeff": "2", "exp": [..]}]}
//   subring    {"ambient": <algebra>, "generators": [<term>...], "base": "Q"}
// Reports are ordered objects so byte-identical output is reproducible.
#pragma once

#include "monalg/classgroup.hpp"

#include <json.hpp>

namespace monalg {

using Json = nlohmann::ordered_json;

inline Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const Int& x : v) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
      a.push_back(static_cast<long long>(x));
    else
      a.push_back(x.str());
  }
  return a;
}

inline Vec vec_from_json(const Json& a) {
  if (!a.is_array()) throw input_error("expected an array of integers");
  Vec v;
  for (const Json& x : a) {
    if (x.is_number_integer()) v.push_back(Int(x.get<long long>()));
    else if (x.is_string()) v.push_back(Int(x.get<std::string>()));
    else throw input_error("expected an integer entry");
  }
  return v;
}

inline Json monoid_to_json(const AffineMonoid& m) {
  Json j;
  j["dim"] = m.dim();
  Json gens = Json::array();
  for (const Vec& g : m.generators()) gens.push_back(vec_to_json(g));
  j["generators"] = gens;
  return j;
}

inline AffineMonoid monoid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
    throw input_error("monoid: expected {\"dim\", \"generators\"}");
  size_t dim = j.at("dim").get<size_t>();
  std::vector<Vec> gens;
  for (const Json& g : j.at("generators")) gens.push_back(vec_from_json(g));
  return AffineMonoid(dim, gens);
}

inline Json ideal_to_json(const MonomialIdeal& i) {
  Json j;
  j["host"] = monoid_to_json(i.host());
  Json gens = Json::array();
  for (const Vec& g : i.generators()) gens.push_back(vec_to_json(g));
  j["generators"] = gens;
  return j;
}

inline MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("host") || !j.contains("generators"))
    throw input_error("ideal: expected {\"host\", \"generators\"}");
  AffineMonoid host = monoid_from_json(j.at("host"));
  std::vector<Vec> gens;
  for (const Json& g : j.at("generators")) gens.push_back(vec_from_json(g));
  return MonomialIdeal(host, gens);
}

inline Json algebra_to_json(const HodgeAlgebra& a) {
  Json j;
  j["ring"] = a.coeff().to_string();
  j["monoid"] = monoid_to_json(a.monoid());
  Json gens = Json::array();
  for (const Vec& g : a.ideal().generators()) gens.push_back(vec_to_json(g));
  j["ideal"] = gens;
  return j;
}

inline HodgeAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("monoid"))
    throw input_error("algebra: expected {\"ring\", \"monoid\", \"ideal\"}");
  RingSpec spec = RingSpec::parse(j.at("ring").get<std::string>());
  AffineMonoid monoid = monoid_from_json(j.at("monoid"));
  std::vector<Vec> gens;
  if (j.contains("ideal"))
    for (const Json& g : j.at("ideal")) gens.push_back(vec_from_json(g));
  return HodgeAlgebra(spec, monoid, MonomialIdeal(monoid, gens));
}

inline Json element_terms_to_json(const AlgebraElement& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json t;
    t["coeff"] = c.to_string();
    t["exp"] = vec_to_json(m);
    terms.push_back(t);
  }
  return terms;
}

inline Json element_to_json(const AlgebraElement& e) {
  Json j;
  j["algebra"] = algebra_to_json(e.parent());
  j["terms"] = element_terms_to_json(e);
  return j;
}

inline AlgebraElement element_terms_from_json(const HodgeAlgebra& a, const Json& terms) {
  AlgebraElement e = AlgebraElement::zero(a);
  for (const Json& t : terms) {
    RingElem c = RingElem::parse(a.coeff(), t.at("coeff").get<std::string>());
    Vec m = vec_from_json(t.at("exp"));
    e = e + AlgebraElement::monomial(a, c, m);
  }
  return e;
}

inline AlgebraElement element_from_json(const Json& j) {
  HodgeAlgebra a = algebra_from_json(j.at("algebra"));
  return element_terms_from_json(a, j.at("terms"));
}

inline Json subring_to_json(const MonomialSubring& s) {
  Json j;
  j["ambient"] = algebra_to_json(s.ambient());
  Json gens = Json::array();
  for (const auto& g : s.generators()) {
    Json t;
    t["coeff"] = g.coeff.to_string();
    t["exp"] = vec_to_json(g.monomial);
    gens.push_back(t);
  }
  j["generators"] = gens;
  if (s.base()) j["base"] = s.base()->sub().to_string();
  j["degree_bound"] = s.degree_bound().str();
  return j;
}

inline MonomialSubring subring_from_json(const Json& j, const Int& default_degree) {
  HodgeAlgebra amb = algebra_from_json(j.at("ambient"));
  std::vector<SubringGenerator> gens;
  for (const Json& t : j.at("generators"))
    gens.push_back(SubringGenerator{RingElem::parse(amb.coeff(), t.at("coeff").get<std::string>()),
                                    vec_from_json(t.at("exp"))});
  std::optional<CoeffExtension> base;
  if (j.contains("base"))
    base = CoeffExtension(RingSpec::parse(j.at("base").get<std::string>()), amb.coeff());
  Int d = j.contains("degree_bound") ? Int(j.at("degree_bound").get<std::string>()) : default_degree;
  return MonomialSubring(amb, gens, base, d);
}

inline Json verdict_to_json(const SubintegralityVerdict& v) {
  Json j;
  switch (v.status) {
    case SubintStatus::yes: j["status"] = "yes"; break;
    case SubintStatus::no: j["status"] = "no"; break;
    case SubintStatus::unknown_within_bound: j["status"] = "unknown_within_bound"; break;
  }
  j["j_max"] = v.j_max;
  if (v.status == SubintStatus::yes) {
    Json ws = Json::array();
    for (const GenWitness& w : v.witnesses) {
      Json x;
      x["generator"] = vec_to_json(w.z);
      x["j1"] = w.j1;
      x["j2"] = w.j2;
      x["threshold"] = w.threshold.str();
      ws.push_back(x);
    }
    j["witnesses"] = ws;
  }
  if (v.status == SubintStatus::no) {
    j["generator"] = vec_to_json(v.no_generator);
    j["gcd"] = v.no_gcd.str();
  }
  return j;
}

}  // namespace monalg
