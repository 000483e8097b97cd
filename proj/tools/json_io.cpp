#include "json_io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace heckewalk::json_io {

json to_json(const QPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

json to_json(const Rational& x) {
  return {{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

json to_json(const Perm& w) { return w.word(); }

json to_json(const GenSequence& r) { return r.letters(); }

json to_json(const HeckeElt& h) {
  json terms = json::array();
  for (const auto& [w, c] : h.sorted_terms()) terms.push_back({{"perm", to_json(w)}, {"coeff", to_json(c)}});
  return {{"degree", h.degree()}, {"terms", std::move(terms)}};
}

json to_json(const TightClass& c) {
  json out = {{"tag", to_string(c.tag)}, {"uses_inverse", c.uses_inverse}};
  if (c.witness) {
    out["witness"] = to_json(*c.witness);
    out["inner"] = to_string(c.inner);
  }
  if (c.search_truncated) out["search_truncated"] = true;
  return out;
}

json to_json(const AlphaReport& report) {
  json entries = json::array();
  for (const auto& [w, e] : report.entries) {
    entries.push_back(
        {{"perm", to_json(w)}, {"closed", to_json(e.closed)}, {"oracle", to_json(e.oracle)}, {"match", e.match}});
  }
  return {{"sequence", to_json(report.sequence)},
          {"degree", report.degree},
          {"classification", to_json(report.classification)},
          {"entries", std::move(entries)},
          {"all_match", report.all_match}};
}

json to_json(const Distribution& d) {
  json probs = json::array();
  if (d.mode() == DistMode::Exact) {
    for (const auto& [w, p] : d.exact_probs()) probs.push_back({{"perm", to_json(w)}, {"prob", to_json(p)}});
  } else {
    for (const auto& [w, p] : d.empirical_probs()) probs.push_back({{"perm", to_json(w)}, {"prob", p}});
  }
  return {{"degree", d.degree()},
          {"mode", d.mode() == DistMode::Exact ? "exact" : "empirical"},
          {"probs", std::move(probs)}};
}

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw std::invalid_argument("JSON schema: " + what); }

Integer integer_from_string(const json& j) {
  if (!j.is_string()) schema_error("expected a decimal string");
  Integer v;
  if (v.set_str(j.get<std::string>(), 10) != 0) schema_error("bad decimal '" + j.get<std::string>() + "'");
  return v;
}

std::vector<int> int_array(const json& j) {
  if (!j.is_array()) schema_error("expected an integer array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) schema_error("expected an integer");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) schema_error("polynomial must be an array");
  std::vector<Integer> cs;
  for (const auto& e : j) cs.push_back(integer_from_string(e));
  QPoly p(std::move(cs));
  if (p.coeffs().size() != j.size()) schema_error("polynomial has trailing zero coefficients");
  return p;
}

Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) schema_error("rational needs num and den");
  Integer den = integer_from_string(j["den"]);
  if (den <= 0) schema_error("denominator must be positive");
  Rational r(integer_from_string(j["num"]), den);
  r.canonicalize();
  return r;
}

Perm perm_from_json(const json& j) { return Perm(int_array(j)); }

GenSequence sequence_from_json(const json& j) { return GenSequence(int_array(j)); }

HeckeElt hecke_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms")) schema_error("Hecke element needs degree and terms");
  HeckeElt h(j["degree"].get<int>());
  for (const auto& t : j["terms"]) {
    Perm w = perm_from_json(t.at("perm"));
    QPoly c = qpoly_from_json(t.at("coeff"));
    if (c.is_zero()) schema_error("zero coefficient stored explicitly");
    if (!h.coefficient(w).is_zero()) schema_error("duplicate permutation " + w.to_string());
    h.add_term(w, c);
  }
  return h;
}

}  // namespace heckewalk::json_io
