#pragma once

#include <string>

#include "json.hpp"
#include "linkage/campaigns.hpp"
#include "linkage/certificates.hpp"
#include "linkage/feasibility.hpp"
#include "linkage/io.hpp"

namespace linkage {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const Collection& x) {
  Json members = Json::array();
  for (const auto& member : x.normalized().members) members.push_back(member);
  return members;
}

inline Json to_json(const LinkagePair& pair) {
  return Json{{"a_part", make_vertex_set(pair.a_part)}, {"b_path", pair.b_path.vertices}};
}

inline Json to_json(const CertificateReport& r) {
  return Json{{"kind", to_string(r.kind)},
              {"collection", to_json(r.collection)},
              {"neighborhood_cap", r.neighborhood_cap},
              {"lhs_edges_doubled", r.lhs_edges_doubled},
              {"rhs_bound_doubled", r.rhs_bound_doubled},
              {"holds", r.holds}};
}

inline Json to_json(const Verdict& v) {
  Json j{{"schema_version", kSchemaVersion}, {"outcome", to_string(v.outcome)}};
  if (v.pair) j["linkage_pair"] = to_json(*v.pair);
  if (v.report) {
    j["report"] = to_json(*v.report);
    j["equality"] = v.report->equality();
  }
  if (v.outcome == VerdictOutcome::inconclusive) j["reason"] = "budget";
  return j;
}

inline const char* to_string(LinkageStatus s) {
  switch (s) {
    case LinkageStatus::feasible: return "feasible";
    case LinkageStatus::infeasible: return "infeasible";
    case LinkageStatus::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

inline Json to_json(const LinkageResult& r) {
  Json j{{"schema_version", kSchemaVersion}, {"outcome", to_string(r.status)}};
  if (r.pair) j["linkage_pair"] = to_json(*r.pair);
  j["nodes_expanded"] = r.nodes_expanded;
  return j;
}

inline Json to_json(const RemovablePathResult& r) {
  Json j{{"schema_version", kSchemaVersion}, {"outcome", r.ok() ? "found" : "failure"}};
  if (r.path) j["path"] = r.path->vertices;
  if (!r.ok()) {
    j["failure"] = to_string(r.failure);
    j["message"] = r.message;
  }
  j["iterations"] = r.iterations;
  j["size_vectors"] = r.size_vectors;
  return j;
}

inline Json to_json(const GmkAudit& a) {
  return Json{{"schema_version", kSchemaVersion},
              {"m", a.m},
              {"k", a.k},
              {"infeasible", a.infeasible},
              {"edges_doubled", a.edges_doubled},
              {"closed_form_doubled", a.closed_form_doubled},
              {"term_sum_doubled", a.term_sum_doubled},
              {"certificate", to_json(a.empty_certificate)},
              {"equality", a.empty_certificate.equality()},
              {"only_empty_collection", a.only_empty_collection},
              {"passed", a.passed()},
              {"mismatch", a.mismatch()}};
}

inline Json to_json(const CampaignConfig& c) {
  Json j{{"seed", c.seed},   {"trials", c.trials}, {"n_min", c.n_min}, {"n_max", c.n_max},
         {"m", c.m},         {"p", c.p}};
  j["model"] = c.model == GraphModel::gnp ? Json{{"kind", "gnp"}, {"p", c.p}}
                                          : Json{{"kind", "k-connected"}, {"k", c.k}, {"p", c.p}};
  j["budget"] = Json{{"max_nodes_expanded", c.budget.max_nodes_expanded}, {"time_limit_ms", c.budget.time_limit_ms}};
  return j;
}

inline Json to_json(const TrialRecord& r, bool with_timing) {
  Json j{{"index", r.index}, {"status", to_string(r.status)}};
  if (r.violation) j["violation"] = true;
  if (r.budget_exhausted) j["budget_exhausted"] = true;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.graph6.empty()) {
    j["graph6"] = r.graph6;
    j["roots"] = Json{{"a", r.a}, {"b1", r.b1}, {"b2", r.b2}};
  }
  if (r.iterations >= 0) j["iterations"] = r.iterations;
  if (with_timing) j["millis"] = r.millis;
  return j;
}

// Timing fields are the only non-deterministic part; leave them out to get
// byte-identical reports for identical configurations.
inline Json to_json(const CampaignReport& r, bool with_timing = true) {
  Json trials = Json::array();
  for (const auto& t : r.records) trials.push_back(to_json(t, with_timing));
  Json j{{"schema_version", kSchemaVersion},
         {"campaign", r.campaign},
         {"config", to_json(r.config)},
         {"counts",
          Json{{"trials", r.trials},
               {"feasible", r.feasible},
               {"certified", r.certified},
               {"failures", r.failures},
               {"violations", r.violations},
               {"budget_exhausted", r.budget_exhausted}}},
         {"critical_checks", r.critical_checks},
         {"planar_checks", r.planar_checks},
         {"trial_records", trials}};
  if (with_timing) j["wall_time_ms"] = Json{{"total", r.total_millis}, {"max", r.max_millis}};
  return j;
}

}  // namespace linkage
