#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linkage/connectivity.hpp"
#include "linkage/errors.hpp"
#include "linkage/feasibility.hpp"
#include "linkage/graph.hpp"

namespace linkage {

enum class GraphModel { gnp, k_connected };

struct CampaignConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  int n_min = 6;
  int n_max = 10;
  int m = 1;
  GraphModel model = GraphModel::k_connected;
  double p = 0.5;  // edge probability of the G(n, p) draw (both models start from one)
  int k = 4;       // target connectivity for the k_connected model
  SearchBudget budget;

  void validate() const {
    if (trials <= 0) throw InvalidInput("trials must be positive");
    if (m < 0) throw InvalidInput("m must be non-negative");
    if (n_min < m + 2) throw InvalidInput("n_min must be at least m + 2");
    if (n_max < n_min) throw InvalidInput("n_max must be at least n_min");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("p must lie in [0, 1]");
    if (model == GraphModel::k_connected && k < 0) throw InvalidInput("k must be non-negative");
    budget.validate();
  }
};

struct GeneratedInstance {
  std::optional<RootedGraph> rooted;
  std::string failure;  // set when generation failed for this trial
  int added_edges = 0;  // edges added by the connectivity augmentation
};

// Deterministic in (config.seed, trial). The k_connected model draws G(n, p)
// and then adds uniformly random missing edges until the connectivity
// reaches k; this ends at K_n at the latest, so it only fails when n <= k.
inline GeneratedInstance gen_random_rooted(const CampaignConfig& config, int trial) {
  config.validate();
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  GeneratedInstance out;
  const int n = std::uniform_int_distribution<int>(config.n_min, config.n_max)(rng);
  Graph g(n);
  std::bernoulli_distribution coin(config.p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  if (config.model == GraphModel::k_connected) {
    if (config.k > n - 1) {
      out.failure = "no graph on " + std::to_string(n) + " vertices is " + std::to_string(config.k) + "-connected";
      return out;
    }
    while (vertex_connectivity(g) < config.k) {
      std::vector<Edge> missing;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (!g.has_edge(u, v)) missing.push_back({u, v});
        }
      }
      const Edge e = missing[std::uniform_int_distribution<std::size_t>(0, missing.size() - 1)(rng)];
      g.add_edge(e.u, e.v);
      ++out.added_edges;
    }
  }
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) ids[v] = v;
  // Partial Fisher-Yates: the first m + 2 entries are a uniform ordered sample.
  for (int i = 0; i < config.m + 2; ++i) {
    std::swap(ids[i], ids[std::uniform_int_distribution<int>(i, n - 1)(rng)]);
  }
  RootedGraph rg;
  rg.graph = std::move(g);
  rg.a.assign(ids.begin(), ids.begin() + config.m);
  rg.b1 = ids[config.m];
  rg.b2 = ids[config.m + 1];
  out.rooted = std::move(rg);
  return out;
}

}  // namespace linkage
