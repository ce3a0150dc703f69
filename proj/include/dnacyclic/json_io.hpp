#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "dnacyclic/constraints.hpp"
#include "dnacyclic/cyclic_code.hpp"
#include "dnacyclic/sigma_set.hpp"

// JSON forms of the code specs and the constraint report.
//
// Cyclic spec:    {"n": 8, "c1": {"g": "...", "p": "...", "a": "..."}, "c2": {...}}
// Sigma-set spec: {"n": 8, "f1": "...", "f2": "...", "augment_complement": false}
//
// Polynomials use the text grammar ("x^2+x+1", "(1+v)x^3+(u)x").

namespace dnacyclic {

using SpecVariant = std::variant<RCodeSpec, SigmaSetSpec>;

inline nlohmann::json to_json(const R1CodeSpec& spec) {
  return {{"g", to_string(spec.g)}, {"p", to_string(spec.p)}, {"a", to_string(spec.a)}};
}

inline nlohmann::json to_json(const RCodeSpec& spec) {
  return {{"n", spec.n}, {"c1", to_json(spec.c1)}, {"c2", to_json(spec.c2)}};
}

inline nlohmann::json to_json(const SigmaSetSpec& spec) {
  return {{"n", spec.n},
          {"f1", to_string(spec.f1)},
          {"f2", to_string(spec.f2)},
          {"augment_complement", spec.augment_complement}};
}

inline R1CodeSpec r1_spec_from_json(const nlohmann::json& j, size_t n) {
  R1CodeSpec spec;
  spec.n = n;
  spec.g = parse_binary_poly(j.at("g").get<std::string>());
  spec.p = j.contains("p") ? parse_binary_poly(j.at("p").get<std::string>())
                           : BinaryPoly::zero();
  spec.a = j.contains("a") ? parse_binary_poly(j.at("a").get<std::string>()) : spec.g;
  return spec;
}

inline SpecVariant spec_from_json(const nlohmann::json& j) {
  if (!j.contains("n")) throw std::invalid_argument("spec JSON: missing \"n\"");
  const size_t n = j.at("n").get<size_t>();
  if (j.contains("c1") || j.contains("c2")) {
    RCodeSpec spec;
    spec.n = n;
    spec.c1 = r1_spec_from_json(j.at("c1"), n);
    spec.c2 = j.contains("c2") ? r1_spec_from_json(j.at("c2"), n) : spec.c1;
    return spec;
  }
  if (j.contains("f1") || j.contains("f2")) {
    SigmaSetSpec spec;
    spec.n = n;
    spec.f1 = parse_r1_poly(j.at("f1").get<std::string>());
    spec.f2 = j.contains("f2") ? parse_r1_poly(j.at("f2").get<std::string>()) : spec.f1;
    spec.augment_complement = j.value("augment_complement", false);
    return spec;
  }
  throw std::invalid_argument(
      "spec JSON: expected either {n, c1, c2} or {n, f1, f2}");
}

inline SpecVariant spec_from_json_text(const std::string& text) {
  return spec_from_json(nlohmann::json::parse(text));
}

inline nlohmann::json to_json(const ValidationReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"warning", c.warning},
                      {"detail", c.detail}});
  return {{"form", rep.form}, {"ok", rep.ok()}, {"checks", checks}};
}

inline nlohmann::json to_json(const ComponentReversibility& c) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& ch : c.checks)
    checks.push_back({{"name", ch.name}, {"pass", ch.pass}});
  return {{"reversible", c.reversible}, {"branch", c.branch}, {"checks", checks}};
}

inline nlohmann::json to_json(const BruteVerdict& v) {
  nlohmann::json j{{"value", v.value}};
  if (v.witness) j["witness"] = to_string(*v.witness);
  return j;
}

inline nlohmann::json to_json(const GcReport& gc) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [w, count] : gc.histogram) hist[std::to_string(w)] = count;
  return {{"histogram", hist},
          {"uniform_nonzero_gc", gc.uniform_nonzero_gc},
          {"balanced_every_word", gc.balanced_every_word}};
}

inline nlohmann::json to_json(const ConstraintReport& rep) {
  nlohmann::json j;
  j["validation"] = {{"ok", rep.validation.ok()},
                     {"c1", to_json(rep.validation.c1)},
                     {"c2", to_json(rep.validation.c2)}};
  if (!rep.validation.ok()) return j;
  j["reversible"] = {{"structural",
                      {{"value", rep.structural_reversible.value},
                       {"c1", to_json(rep.structural_reversible.c1)},
                       {"c2", to_json(rep.structural_reversible.c2)}}},
                     {"bruteforce", to_json(rep.brute_reversible)}};
  j["reverse_complement"] = {{"structural",
                              {{"value", rep.structural_rc.value},
                               {"contains_all_u", rep.structural_rc.contains_all_u}}},
                             {"bruteforce", to_json(rep.brute_rc)}};
  j["code_size"] = rep.code_size;
  j["min_distance"] = rep.min_distance;
  j["component_distances"] = {rep.component_distance_1, rep.component_distance_2};
  j["rank"] = rep.rank;
  j["griesmer"] = {{"bound", rep.griesmer.bound}, {"satisfied", rep.griesmer.satisfied}};
  j["gc"] = to_json(rep.gc);
  return j;
}

}  // namespace dnacyclic
