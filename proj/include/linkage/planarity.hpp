#pragma once

#include <optional>
#include <span>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "linkage/certificates.hpp"
#include "linkage/collection.hpp"
#include "linkage/collection_search.hpp"
#include "linkage/errors.hpp"
#include "linkage/graph.hpp"

namespace linkage {

inline bool is_planar(const Graph& g) {
  const long long v = g.vertex_count();
  const long long e = static_cast<long long>(g.edge_count());
  if (v <= 4) return true;
  if (e > 3 * v - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(static_cast<std::size_t>(v));
  for (const Edge& edge : g.edges()) boost::add_edge(edge.u, edge.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// A graph together with vertices that must appear on the boundary of a disc
// drawing, in this cyclic order.
struct DiscInstance {
  Graph graph;
  std::vector<Vertex> boundary;
};

// Adds the cycle s_1 ... s_t s_1 (reusing edges already present) and an apex
// joined to every s_i; the instance is disc planar iff the result is planar.
// Reflections of the boundary order give the same answer.
inline bool is_disc_planar(const DiscInstance& d) {
  check_vertex_set(d.graph, d.boundary);
  if (make_vertex_set(d.boundary).size() != d.boundary.size()) throw InvalidInput("repeated boundary vertex");
  const int n = d.graph.vertex_count();
  Graph h(n + 1);
  for (const Edge& e : d.graph.edges()) h.add_edge(e.u, e.v);
  const std::size_t t = d.boundary.size();
  if (t >= 2) {
    for (std::size_t i = 0; i < t; ++i) h.add_edge(d.boundary[i], d.boundary[(i + 1) % t]);
  }
  for (Vertex s : d.boundary) h.add_edge(n, s);
  return is_planar(h);
}

// True iff every member has |N(X)| <= 3 and (G/𝒳, a1, b1, a2, b2) is disc
// planar. Such a collection rules out a linkage pair.
inline bool check_seymour_certificate(const RootedGraph& rg, const Collection& x) {
  rg.validate();
  if (rg.m() != 2) throw InvalidInput("planar certificates are defined for m = 2");
  validate_collection(rg.graph, rg.roots(), x);
  for (const auto& member : x.normalized().members) {
    if (neighborhood(rg.graph, member).size() > 3) return false;
  }
  const Contraction c = contract_collection(rg.graph, x);
  DiscInstance d{c.graph, {c.to_new[rg.a[0]], c.to_new[rg.b1], c.to_new[rg.a[1]], c.to_new[rg.b2]}};
  return is_disc_planar(d);
}

// For a planar certificate, 𝒢/𝒳 stays planar, so e(𝒢/𝒳) <= 3 v(G/𝒳) - 6.
// Returns whether that count holds on the instance.
inline bool planar_certificate_bound_holds(const RootedGraph& rg, const Collection& x) {
  if (!check_seymour_certificate(rg, x)) throw InvalidInput("collection is not a planar certificate");
  const Contraction c = augmented_contraction(rg, x);
  const long long v = c.graph.vertex_count();
  return static_cast<long long>(c.graph.edge_count()) <= 3 * v - 6;
}

struct PlanarCertificateSearch {
  CollectionSearchStatus status = CollectionSearchStatus::none;
  std::optional<Collection> collection;
};

// Exhaustive search over collections of connected members with |N(X)| <= 3
// for one passing check_seymour_certificate.
inline PlanarCertificateSearch search_seymour_certificate(const RootedGraph& rg, const SearchBudget& budget = {}) {
  rg.validate();
  if (rg.m() != 2) throw InvalidInput("planar certificates are defined for m = 2");
  const detail::BitGraph bg(rg.graph);
  detail::BudgetMeter meter(budget);
  const auto members = detail::connected_members(bg, bg.all() & ~detail::to_mask(rg.roots()), 3, meter);
  PlanarCertificateSearch result;
  if (!meter.exhausted()) {
    detail::for_each_family(members, meter, [&](std::span<const detail::Member> family) {
      Collection x = detail::to_collection(family);
      if (check_seymour_certificate(rg, x)) {
        result.collection = std::move(x);
        return true;
      }
      return false;
    });
  }
  if (result.collection) {
    result.status = CollectionSearchStatus::found;
  } else {
    result.status = meter.exhausted() ? CollectionSearchStatus::budget_exhausted : CollectionSearchStatus::none;
  }
  return result;
}

}  // namespace linkage
