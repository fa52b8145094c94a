#pragma once

// JSON form of VerificationReport:
// {check_name, params:{...}, instances_checked,
//  violations:[{tree, assertion, expected, actual}],
//  equality_witnesses:[{tree, psi, phi, family}],
//  remarks:[{label, values}], elapsed_ms}

#include <chrono>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "dp.hpp"
#include "families.hpp"
#include "tree.hpp"
#include "verifier.hpp"

namespace dissoc {

enum class Timing { include, omit };

inline nlohmann::json to_json(const VerificationReport& r, Timing timing = Timing::include) {
  using nlohmann::json;
  json j;
  j["check_name"] = r.check_name;
  j["params"] = r.params;
  j["instances_checked"] = r.instances_checked;
  j["violations"] = json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back({{"tree", v.tree}, {"assertion", v.assertion}, {"expected", v.expected}, {"actual", v.actual}});
  }
  j["equality_witnesses"] = json::array();
  for (const auto& w : r.equality_witnesses) {
    j["equality_witnesses"].push_back({{"tree", w.tree}, {"psi", w.psi}, {"phi", w.phi}, {"family", w.family}});
  }
  j["remarks"] = json::array();
  for (const auto& m : r.remarks) j["remarks"].push_back({{"label", m.label}, {"values", m.values}});
  if (timing == Timing::include) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

/// Parses a report and checks that every equality witness has phi == f(psi).
inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.check_name = j.at("check_name").get<std::string>();
  r.params = j.at("params").get<Quantities>();
  r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
  for (const auto& v : j.at("violations")) {
    r.violations.push_back({v.at("tree").get<std::string>(), v.at("assertion").get<std::string>(),
                            v.at("expected").get<Quantities>(), v.at("actual").get<Quantities>()});
  }
  for (const auto& w : j.at("equality_witnesses")) {
    EqualityWitness e{w.at("tree").get<std::string>(), w.at("psi").get<int>(), w.at("phi").get<Count>(),
                      w.at("family").get<std::string>()};
    if (e.phi != f_bound(e.psi)) {
      throw std::runtime_error("witness with psi=" + std::to_string(e.psi) + " has phi=" + std::to_string(e.phi) +
                               " != f(psi)");
    }
    const Tree t = parse_edge_list(e.tree);
    const DpTable table = dp_rooted(t, 0);
    if (table.psi() != e.psi || table.phi() != e.phi) {
      throw std::runtime_error("witness values do not match its tree: " + e.tree);
    }
    r.equality_witnesses.push_back(std::move(e));
  }
  if (j.contains("remarks")) {
    for (const auto& m : j.at("remarks")) r.remarks.push_back({m.at("label").get<std::string>(), m.at("values").get<Quantities>()});
  }
  if (j.contains("elapsed_ms")) r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<std::int64_t>());
  return r;
}

}  // namespace dissoc
