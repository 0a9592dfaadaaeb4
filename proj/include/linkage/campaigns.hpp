#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkage/certificates.hpp"
#include "linkage/connectivity.hpp"
#include "linkage/enumerate.hpp"
#include "linkage/feasibility.hpp"
#include "linkage/generate.hpp"
#include "linkage/io.hpp"
#include "linkage/planarity.hpp"

namespace linkage {

enum class TrialStatus { feasible, certified, failure };

inline const char* to_string(TrialStatus s) {
  switch (s) {
    case TrialStatus::feasible: return "feasible";
    case TrialStatus::certified: return "certified";
    case TrialStatus::failure: return "failure";
  }
  return "unknown";
}

// One instance of a campaign. A violation is a failure that contradicts a
// theorem (as opposed to a generation failure or an exhausted budget); the
// graph6 string and roots are enough to replay it from the CLI.
struct TrialRecord {
  long long index = 0;
  TrialStatus status = TrialStatus::failure;
  bool violation = false;
  bool budget_exhausted = false;
  std::string detail;
  std::string graph6;
  std::vector<Vertex> a;
  Vertex b1 = -1;
  Vertex b2 = -1;
  int iterations = -1;  // removable-path reroutes, when applicable
  double millis = 0.0;
};

struct CampaignReport {
  std::string campaign;
  CampaignConfig config;
  // Every trial for sampled campaigns; only non-passing instances for the
  // exhaustive sweep.
  std::vector<TrialRecord> records;
  long long trials = 0;
  long long feasible = 0;
  long long certified = 0;
  long long failures = 0;
  long long violations = 0;
  long long budget_exhausted = 0;
  long long critical_checks = 0;  // critically feasible (G, U) pairs certified
  long long planar_checks = 0;    // m = 2 instances cross-checked against planar certificates
  double total_millis = 0.0;
  double max_millis = 0.0;

  void add(TrialRecord r, bool keep = true) {
    ++trials;
    switch (r.status) {
      case TrialStatus::feasible: ++feasible; break;
      case TrialStatus::certified: ++certified; break;
      case TrialStatus::failure: ++failures; break;
    }
    if (r.violation) ++violations;
    if (r.budget_exhausted) ++budget_exhausted;
    total_millis += r.millis;
    max_millis = std::max(max_millis, r.millis);
    if (keep || r.status == TrialStatus::failure) records.push_back(std::move(r));
  }
};

namespace detail {

inline TrialRecord start_record(long long index, const RootedGraph& rg) {
  TrialRecord r;
  r.index = index;
  r.graph6 = serialize_graph6(rg.graph);
  r.a = rg.a;
  r.b1 = rg.b1;
  r.b2 = rg.b2;
  return r;
}

inline double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline void require_connected_model(const CampaignConfig& config) {
  config.validate();
  if (config.model != GraphModel::k_connected || config.k != 2 * config.m + 2) {
    throw InvalidInput("campaign needs the k-connected model with k = 2m + 2");
  }
}

}  // namespace detail

// Every (2m+2)-connected sample must be feasible.
inline CampaignReport campaign_connected_feasibility(const CampaignConfig& config) {
  detail::require_connected_model(config);
  CampaignReport report;
  report.campaign = "connected-feasibility";
  report.config = config;
  for (int t = 0; t < config.trials; ++t) {
    const auto start = std::chrono::steady_clock::now();
    GeneratedInstance inst = gen_random_rooted(config, t);
    if (!inst.rooted) {
      TrialRecord r;
      r.index = t;
      r.detail = "generation failure: " + inst.failure;
      r.millis = detail::millis_since(start);
      report.add(std::move(r));
      continue;
    }
    const RootedGraph& rg = *inst.rooted;
    TrialRecord r = detail::start_record(t, rg);
    const auto found = find_linkage_pair(rg, config.budget);
    if (found.status == LinkageStatus::feasible) {
      if (is_linkage_pair(rg, *found.pair)) {
        r.status = TrialStatus::feasible;
      } else {
        r.violation = true;
        r.detail = "returned linkage pair fails its invariants";
      }
    } else if (found.status == LinkageStatus::budget_exhausted) {
      r.budget_exhausted = true;
      r.detail = "budget exhausted";
    } else {
      r.violation = true;
      r.detail = "(2m+2)-connected rooted graph reported infeasible";
    }
    r.millis = detail::millis_since(start);
    report.add(std::move(r));
  }
  return report;
}

// Every (2m+2)-connected sample must yield a removable path, re-verified here
// from scratch, with strictly increasing component-size vectors.
inline CampaignReport campaign_removable_paths(const CampaignConfig& config) {
  detail::require_connected_model(config);
  CampaignReport report;
  report.campaign = "removable-paths";
  report.config = config;
  for (int t = 0; t < config.trials; ++t) {
    const auto start = std::chrono::steady_clock::now();
    GeneratedInstance inst = gen_random_rooted(config, t);
    if (!inst.rooted) {
      TrialRecord r;
      r.index = t;
      r.detail = "generation failure: " + inst.failure;
      r.millis = detail::millis_since(start);
      report.add(std::move(r));
      continue;
    }
    const RootedGraph& rg = *inst.rooted;
    TrialRecord r = detail::start_record(t, rg);
    const auto result = removable_path(rg, config.budget);
    r.iterations = result.iterations;
    if (result.ok()) {
      const Path& p = *result.path;
      bool good = is_path_in(rg.graph, p) && p.front() == rg.b1 && p.back() == rg.b2;
      for (Vertex ai : rg.a) good = good && !p.contains(ai);
      good = good && components_avoiding(rg.graph, p.vertex_set()).size() <= 1;
      for (std::size_t i = 1; i < result.size_vectors.size(); ++i) {
        const auto& prev = result.size_vectors[i - 1];
        const auto& next = result.size_vectors[i];
        good = good && std::lexicographical_compare(prev.begin(), prev.end(), next.begin(), next.end());
      }
      if (good) {
        r.status = TrialStatus::feasible;
      } else {
        r.violation = true;
        r.detail = "returned path fails re-verification";
      }
    } else if (result.failure == RemovableFailure::budget_exhausted) {
      r.budget_exhausted = true;
      r.detail = result.message;
    } else {
      r.violation = true;
      r.detail = std::string(to_string(result.failure)) + ": " + result.message;
    }
    r.millis = detail::millis_since(start);
    report.add(std::move(r));
  }
  return report;
}

namespace detail {

template <typename F>
void for_each_combination(int n, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == k) {
      f(idx);
      return;
    }
    for (int v = from; v < n; ++v) {
      idx[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
}

// Checks the critical certificate for every U drawn from the interior of
// the found linkage path (critical U always lie there). Returns a violation
// message or an empty string.
inline std::string check_critical_subsets(const RootedGraph& rg, const LinkagePair& pair, const SearchBudget& budget,
                                          long long& checks) {
  const auto& path = pair.b_path.vertices;
  std::vector<Vertex> interior(path.begin() + 1, path.end() - 1);
  if (interior.size() > 12) return {};
  for (Mask bits = 0; bits < (Mask{1} << interior.size()); ++bits) {
    VertexSet u;
    for (std::size_t i = 0; i < interior.size(); ++i) {
      if ((bits >> i) & 1) u.push_back(interior[i]);
    }
    u = make_vertex_set(std::move(u));
    if (!is_critically_feasible(rg, u)) continue;
    const auto search = search_collection(rg, CertificateKind::critical, u, budget);
    if (search.status == CollectionSearchStatus::budget_exhausted) continue;
    if (search.status != CollectionSearchStatus::found) {
      return "critically feasible w.r.t. U of size " + std::to_string(u.size()) + " but no critical certificate";
    }
    if (!verify_collection_critical(rg, u, search.report->collection).holds) {
      return "critical certificate failed re-verification";
    }
    ++checks;
  }
  return {};
}

}  // namespace detail

// Every root placement (a-set as a combination, ordered b1, b2) on every
// graph in `graphs`, or on all non-isomorphic graphs with n_min..n_max
// vertices when `graphs` is empty. Each instance must be feasible or carry
// a linkage certificate; feasible instances additionally certify every
// critically feasible U on their path, and m = 2 instances are matched
// against planar certificates in both directions.
inline CampaignReport campaign_exhaustive_small(const CampaignConfig& config, std::span<const Graph> graphs = {}) {
  if (config.m < 0 || config.n_min < 0 || config.n_max < config.n_min) throw InvalidInput("bad exhaustive range");
  config.budget.validate();
  CampaignReport report;
  report.campaign = "exhaustive";
  report.config = config;
  std::vector<Graph> pool(graphs.begin(), graphs.end());
  if (pool.empty()) {
    for (int n = std::max(config.n_min, config.m + 2); n <= config.n_max; ++n) {
      auto level = nonisomorphic_graphs(n);
      pool.insert(pool.end(), level.begin(), level.end());
    }
  }
  const int m = config.m;
  long long index = 0;
  for (const Graph& g : pool) {
    const int n = g.vertex_count();
    if (n < m + 2) continue;
    detail::for_each_combination(n, m, [&](const std::vector<int>& a) {
      for (Vertex b1 = 0; b1 < n; ++b1) {
        for (Vertex b2 = 0; b2 < n; ++b2) {
          if (b1 == b2 || std::find(a.begin(), a.end(), b1) != a.end() ||
              std::find(a.begin(), a.end(), b2) != a.end()) {
            continue;
          }
          const auto start = std::chrono::steady_clock::now();
          const RootedGraph rg{g, a, b1, b2};
          TrialRecord r = detail::start_record(index++, rg);
          const Verdict v = theorem_check(rg, config.budget);
          switch (v.outcome) {
            case VerdictOutcome::feasible: {
              r.status = TrialStatus::feasible;
              r.detail = detail::check_critical_subsets(rg, *v.pair, config.budget, report.critical_checks);
              if (!r.detail.empty()) {
                r.status = TrialStatus::failure;
                r.violation = true;
              }
              break;
            }
            case VerdictOutcome::certified:
              r.status = TrialStatus::certified;
              if (!verify_collection_2mlink(rg, v.report->collection).holds) {
                r.status = TrialStatus::failure;
                r.violation = true;
                r.detail = "certificate failed re-verification";
              }
              break;
            case VerdictOutcome::counterexample_candidate:
              r.violation = true;
              r.detail = "infeasible and no certifying collection exists";
              break;
            case VerdictOutcome::inconclusive:
              r.budget_exhausted = true;
              r.detail = "budget exhausted";
              break;
          }
          if (m == 2 && r.status != TrialStatus::failure) {
            const auto planar = search_seymour_certificate(rg, config.budget);
            if (planar.status != CollectionSearchStatus::budget_exhausted) {
              ++report.planar_checks;
              const bool has_certificate = planar.status == CollectionSearchStatus::found;
              if (has_certificate == (v.outcome == VerdictOutcome::feasible)) {
                r.status = TrialStatus::failure;
                r.violation = true;
                r.detail = has_certificate ? "feasible instance has a planar certificate"
                                           : "infeasible instance has no planar certificate";
              }
            }
          }
          r.millis = detail::millis_since(start);
          report.add(std::move(r), false);
        }
      }
    });
  }
  return report;
}

}  // namespace linkage
