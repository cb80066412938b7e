#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "padicpow/decide.hpp"

namespace padicpow {

using Json = nlohmann::ordered_json;

namespace detail {

// Integers that may not fit in 64 bits travel as decimal strings.
inline Json int_to_json(const Int& v) {
  if (v >= 0 && v <= Int(std::numeric_limits<std::int64_t>::max())) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

}  // namespace detail

inline Json to_json(const OKElem& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords) coords.push_back(c.str());
  return coords;
}

inline OKElem okelem_from_json(const Json& j) {
  OKElem x;
  for (const auto& c : j) x.coords.push_back(Int(c.get<std::string>()));
  return x;
}

inline Json field_to_json(const LocalField& field) {
  return Json{{"p", field.p()}, {"e", field.e()}, {"f", field.f()}};
}

inline Json to_json(const BoundsReport& b) {
  Json j{{"kras_upper", to_string(b.kras_upper)},
         {"max_ord_bound", to_string(b.max_ord_bound)},
         {"cardA_log_p", to_string(b.cardA_log_p)}};
  if (b.pejkovic_log_p) j["pejkovic_log_p"] = *b.pejkovic_log_p;
  return j;
}

inline BoundsReport bounds_from_json(const Json& j) {
  BoundsReport b;
  b.kras_upper = rational_from_string(j.at("kras_upper").get<std::string>());
  b.max_ord_bound = rational_from_string(j.at("max_ord_bound").get<std::string>());
  b.cardA_log_p = rational_from_string(j.at("cardA_log_p").get<std::string>());
  if (j.contains("pejkovic_log_p")) b.pejkovic_log_p = j.at("pejkovic_log_p").get<double>();
  return b;
}

inline Json to_json(const Counterexample& c) {
  return Json{{"a", to_json(c.point)},
              {"a_text", c.point.str()},
              {"inverted", c.inverted},
              {"value", to_json(c.value)},
              {"value_class", Json{{"index", c.value_class.index}, {"rep", to_json(c.value_class.rep)},
                                   {"rep_text", c.value_class.rep.str()}}}};
}

inline Counterexample counterexample_from_json(const Json& j) {
  Counterexample c;
  c.point = okelem_from_json(j.at("a"));
  c.inverted = j.at("inverted").get<bool>();
  c.value = okelem_from_json(j.at("value"));
  c.value_class.index = j.at("value_class").at("index").get<std::size_t>();
  c.value_class.rep = okelem_from_json(j.at("value_class").at("rep"));
  return c;
}

/// Report body without the field block; see report_to_json.
inline Json to_json(const DecisionReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["class"] = to_string(r.class_tested);
  j["M"] = r.M;
  j["final_m"] = r.final_m;
  j["witness_count"] = detail::int_to_json(r.witness_count);
  if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
  j["m_history"] = r.m_history;
  j["evaluations"] = r.evaluations;
  j["reason"] = r.reason;
  j["bounds"] = to_json(r.bounds);
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : r.parts) parts.push_back(to_json(p));
    j["parts"] = parts;
  }
  return j;
}

inline DecisionReport decision_from_json(const Json& j) {
  DecisionReport r;
  r.verdict = j.at("verdict").get<bool>();
  const std::string cls = j.at("class").get<std::string>();
  if (cls != "C_ZK" && cls != "C_K") throw Error(ErrorCode::ParseError, "unknown class '" + cls + "'");
  r.class_tested = cls == "C_ZK" ? ClassTested::C_ZK : ClassTested::C_K;
  r.M = j.at("M").get<std::int64_t>();
  r.final_m = j.at("final_m").get<std::int64_t>();
  r.witness_count = detail::int_from_json(j.at("witness_count"));
  if (j.contains("counterexample")) r.counterexample = counterexample_from_json(j.at("counterexample"));
  r.m_history = j.at("m_history").get<std::vector<std::int64_t>>();
  r.evaluations = j.at("evaluations").get<std::uint64_t>();
  r.reason = j.at("reason").get<std::string>();
  r.bounds = bounds_from_json(j.at("bounds"));
  if (j.contains("parts"))
    for (const auto& p : j.at("parts")) r.parts.push_back(decision_from_json(p));
  return r;
}

inline bool operator==(const BoundsReport& a, const BoundsReport& b) {
  return a.kras_upper == b.kras_upper && a.max_ord_bound == b.max_ord_bound && a.cardA_log_p == b.cardA_log_p &&
         a.pejkovic_log_p == b.pejkovic_log_p;
}

inline bool operator==(const Counterexample& a, const Counterexample& b) {
  return a.point == b.point && a.inverted == b.inverted && a.value == b.value &&
         a.value_class.index == b.value_class.index && a.value_class.rep == b.value_class.rep;
}

inline bool operator==(const DecisionReport& a, const DecisionReport& b) {
  return a.verdict == b.verdict && a.class_tested == b.class_tested && a.M == b.M && a.final_m == b.final_m &&
         a.witness_count == b.witness_count && a.counterexample == b.counterexample && a.m_history == b.m_history &&
         a.bounds == b.bounds && a.evaluations == b.evaluations && a.reason == b.reason && a.parts == b.parts;
}

/// The CLI document: the report with the field block after "class".
inline Json report_to_json(const DecisionReport& r, const LocalField& field) {
  Json body = to_json(r);
  Json out;
  for (auto it = body.begin(); it != body.end(); ++it) {
    out[it.key()] = it.value();
    if (it.key() == "class") out["field"] = field_to_json(field);
  }
  return out;
}

inline Json to_json(const SpectrumReport& s) {
  Json classes = Json::array();
  for (const auto& c : s.classes)
    classes.push_back(Json{{"index", c.index}, {"rep", to_json(c.rep)}, {"rep_text", c.rep.str()}});
  return Json{{"spectrum", classes}, {"attains_zero", s.attains_zero}, {"evaluations", s.evaluations}};
}

inline SpectrumReport spectrum_from_json(const Json& j) {
  SpectrumReport s;
  for (const auto& c : j.at("spectrum")) s.classes.push_back({okelem_from_json(c.at("rep")), c.at("index").get<std::size_t>()});
  s.attains_zero = j.at("attains_zero").get<bool>();
  s.evaluations = j.at("evaluations").get<std::uint64_t>();
  return s;
}

}  // namespace padicpow
