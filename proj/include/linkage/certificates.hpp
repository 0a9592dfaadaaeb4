#pragma once

#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "linkage/collection.hpp"
#include "linkage/collection_search.hpp"
#include "linkage/feasibility.hpp"
#include "linkage/graph.hpp"

namespace linkage {

// Which obstruction a collection is checked against:
//   linkage:  |N(X)| <= m+1 and e(𝒢/𝒳) <= (m+1) v(G/𝒳) - m²/2 - 3m/2 - 1
//   critical: |N(X)| <= m+2 and e(𝒢/𝒳) <= (m+2) v(G/𝒳) - m²/2 - 5m/2 - 3 - |U|
// All bounds are carried doubled so the halves stay integral.
enum class CertificateKind { linkage, critical };

inline const char* to_string(CertificateKind kind) {
  return kind == CertificateKind::linkage ? "linkage" : "critical";
}

struct CertificateReport {
  CertificateKind kind = CertificateKind::linkage;
  Collection collection;
  int neighborhood_cap = 0;
  long long lhs_edges_doubled = 0;
  long long rhs_bound_doubled = 0;
  bool holds = false;

  bool equality() const noexcept { return lhs_edges_doubled == rhs_bound_doubled; }
};

inline int neighborhood_cap(CertificateKind kind, int m) { return kind == CertificateKind::linkage ? m + 1 : m + 2; }

// Doubled right-hand side of the edge bound for v = v(G/𝒳).
inline long long doubled_bound(CertificateKind kind, int m, long long v, long long u_size = 0) {
  const long long mm = m;
  if (kind == CertificateKind::linkage) return 2 * (mm + 1) * v - mm * mm - 3 * mm - 2;
  return 2 * (mm + 2) * v - mm * mm - 5 * mm - 6 - 2 * u_size;
}

namespace detail {

inline CertificateReport make_report(const RootedGraph& rg, CertificateKind kind, std::span<const Vertex> u_set,
                                     const Collection& x) {
  const VertexSet forbidden = set_union(rg.roots(), make_vertex_set({u_set.begin(), u_set.end()}));
  const Contraction c = augmented_contraction(rg, x, forbidden);
  CertificateReport r;
  r.kind = kind;
  r.collection = x.normalized();
  r.neighborhood_cap = neighborhood_cap(kind, rg.m());
  r.lhs_edges_doubled = 2 * static_cast<long long>(c.graph.edge_count());
  r.rhs_bound_doubled = doubled_bound(kind, rg.m(), c.graph.vertex_count(), static_cast<long long>(u_set.size()));
  bool caps_ok = true;
  for (const auto& member : r.collection.members) {
    if (static_cast<int>(neighborhood(rg.graph, member).size()) > r.neighborhood_cap) caps_ok = false;
  }
  r.holds = caps_ok && r.lhs_edges_doubled <= r.rhs_bound_doubled;
  return r;
}

inline VertexSet checked_u_set(const RootedGraph& rg, std::span<const Vertex> u_set) {
  rg.validate();
  check_vertex_set(rg.graph, u_set);
  VertexSet u = make_vertex_set({u_set.begin(), u_set.end()});
  if (sets_intersect(u, rg.roots())) throw InvalidInput("U must avoid the root vertices");
  return u;
}

}  // namespace detail

// Recomputes 𝒢/𝒳 from scratch and evaluates the linkage certificate.
inline CertificateReport verify_collection_2mlink(const RootedGraph& rg, const Collection& x) {
  rg.validate();
  return detail::make_report(rg, CertificateKind::linkage, {}, x);
}

// x must be a (roots ∪ U)-collection.
inline CertificateReport verify_collection_critical(const RootedGraph& rg, std::span<const Vertex> u_set,
                                                    const Collection& x) {
  const VertexSet u = detail::checked_u_set(rg, u_set);
  return detail::make_report(rg, CertificateKind::critical, u, x);
}

// Constructive certificate for infeasible rooted graphs with m <= 1: split
// V(G) around the component D of G (m = 0) or G - a1 (m = 1) holding b1.
// nullopt when the rooted graph is feasible or m >= 2.
inline std::optional<Collection> base_case_collection(const RootedGraph& rg) {
  rg.validate();
  if (rg.m() >= 2 || is_feasible(rg)) return std::nullopt;
  const VertexSet removed = rg.a_set();
  VertexSet d;
  for (const auto& comp : components_avoiding(rg.graph, removed)) {
    if (set_contains(comp, rg.b1)) d = comp;
  }
  VertexSet all(static_cast<std::size_t>(rg.graph.vertex_count()));
  for (Vertex v = 0; v < rg.graph.vertex_count(); ++v) all[v] = v;
  const Vertex b1_only[] = {rg.b1};
  std::vector<Vertex> rest_roots = rg.a;
  rest_roots.push_back(rg.b2);
  Collection x;
  x.members.push_back(set_difference(d, b1_only));
  x.members.push_back(set_difference(set_difference(all, d), make_vertex_set(rest_roots)));
  return x.normalized();
}

// Components of G - (U ∪ {b1, b2}) for a 0-rooted graph that is critically
// feasible with respect to U. Each member attaches to at most two
// consecutive vertices of b1, u_1, ..., u_k, b2 along any b1-b2 path.
inline Collection critical_base_collection(const RootedGraph& rg, std::span<const Vertex> u_set) {
  const VertexSet u = detail::checked_u_set(rg, u_set);
  if (rg.m() != 0) throw InvalidInput("critical base collection needs a 0-rooted graph");
  if (!is_critically_feasible(rg, u)) throw InvalidInput("rooted graph is not critically feasible with respect to U");
  VertexSet removed = u;
  removed.push_back(rg.b1);
  removed.push_back(rg.b2);
  Collection x;
  x.members = components_avoiding(rg.graph, make_vertex_set(removed));
  return x.normalized();
}

enum class CollectionSearchStatus { found, none, budget_exhausted };

struct CollectionSearchResult {
  CollectionSearchStatus status = CollectionSearchStatus::none;
  std::optional<CertificateReport> report;
  std::uint64_t nodes_expanded = 0;
};

// Exhaustive search for a certifying collection. Members are restricted to
// connected sets: splitting a member into its components keeps the family a
// collection and lowers neither side of the test in the wrong direction.
// Families are visited empty-first, then in DFS order over members sorted by
// (size, vertices); the first one passing the bound is returned.
inline CollectionSearchResult search_collection(const RootedGraph& rg, CertificateKind kind,
                                                std::span<const Vertex> u_set, const SearchBudget& budget = {}) {
  const VertexSet u = detail::checked_u_set(rg, u_set);
  if (kind == CertificateKind::linkage && !u.empty()) throw InvalidInput("U only applies to critical certificates");
  const detail::BitGraph bg(rg.graph);
  detail::BudgetMeter meter(budget);
  const detail::Mask forbidden = detail::to_mask(rg.roots()) | detail::to_mask(u);
  const int cap = neighborhood_cap(kind, rg.m());
  const auto members = detail::connected_members(bg, bg.all() & ~forbidden, cap, meter);
  const auto pairs = detail::augmenting_pairs(rg);
  CollectionSearchResult result;
  if (meter.exhausted()) {
    result.status = CollectionSearchStatus::budget_exhausted;
    result.nodes_expanded = meter.nodes();
    return result;
  }
  std::optional<Collection> found;
  detail::for_each_family(members, meter, [&](std::span<const detail::Member> family) {
    const auto counts = detail::contracted_counts(bg, family, pairs);
    if (2 * counts.edges <= doubled_bound(kind, rg.m(), counts.vertices, static_cast<long long>(u.size()))) {
      found = detail::to_collection(family);
      return true;
    }
    return false;
  });
  result.nodes_expanded = meter.nodes();
  if (found) {
    result.status = CollectionSearchStatus::found;
    result.report = detail::make_report(rg, kind, u, *found);
  } else {
    result.status = meter.exhausted() ? CollectionSearchStatus::budget_exhausted : CollectionSearchStatus::none;
  }
  return result;
}

enum class VerdictOutcome { feasible, certified, counterexample_candidate, inconclusive };

inline const char* to_string(VerdictOutcome o) {
  switch (o) {
    case VerdictOutcome::feasible: return "feasible";
    case VerdictOutcome::certified: return "certified";
    case VerdictOutcome::counterexample_candidate: return "counterexample-candidate";
    case VerdictOutcome::inconclusive: return "inconclusive";
  }
  return "unknown";
}

// Exactly one of pair/report is set for feasible/certified; neither otherwise.
struct Verdict {
  VerdictOutcome outcome = VerdictOutcome::inconclusive;
  std::optional<LinkagePair> pair;
  std::optional<CertificateReport> report;
};

// Feasible, or a certifying linkage collection. A counterexample candidate
// means the exhaustive search found neither, which the theorem rules out.
inline Verdict theorem_check(const RootedGraph& rg, const SearchBudget& budget = {}) {
  Verdict v;
  const auto linkage = find_linkage_pair(rg, budget);
  if (linkage.status == LinkageStatus::feasible) {
    v.outcome = VerdictOutcome::feasible;
    v.pair = linkage.pair;
    return v;
  }
  if (linkage.status == LinkageStatus::budget_exhausted) return v;
  const auto search = search_collection(rg, CertificateKind::linkage, {}, budget);
  switch (search.status) {
    case CollectionSearchStatus::found:
      v.outcome = VerdictOutcome::certified;
      v.report = search.report;
      break;
    case CollectionSearchStatus::none:
      v.outcome = VerdictOutcome::counterexample_candidate;
      break;
    case CollectionSearchStatus::budget_exhausted:
      v.outcome = VerdictOutcome::inconclusive;
      break;
  }
  return v;
}

// G_{m,k}: ids a_1..a_m = 0..m-1, b1 = m, b2 = m+1, v_1..v_k = m+2..m+k+1.
// b1 v_1 ... v_k b2 is an induced path, every a_i sees the whole path,
// a_1..a_{m-1} is a clique and a_m has no a-neighbour.
inline RootedGraph gmk_graph(int m, int k) {
  if (m < 0 || k < 0) throw InvalidInput("gmk_graph needs m, k >= 0");
  RootedGraph rg;
  rg.graph = Graph(m + k + 2);
  for (int i = 0; i < m; ++i) rg.a.push_back(i);
  rg.b1 = m;
  rg.b2 = m + 1;
  std::vector<Vertex> path{rg.b1};
  for (int i = 0; i < k; ++i) path.push_back(m + 2 + i);
  path.push_back(rg.b2);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) rg.graph.add_edge(path[i], path[i + 1]);
  for (int i = 0; i < m; ++i) {
    for (Vertex p : path) rg.graph.add_edge(i, p);
  }
  for (int i = 0; i + 1 < m; ++i) {
    for (int j = i + 1; j + 1 < m; ++j) rg.graph.add_edge(i, j);
  }
  return rg;
}

struct GmkAudit {
  int m = 0;
  int k = 0;
  bool infeasible = false;
  long long edges_doubled = 0;        // 2 e(𝒢_{m,k}/∅), counted on the built graph
  long long closed_form_doubled = 0;  // 2(m+1)(m+k+2) - m² - 3m - 2
  long long term_sum_doubled = 0;     // 2[(k+1) + m(k+2) + C(m-1,2) + (m-1)]
  CertificateReport empty_certificate;
  bool only_empty_collection = false;  // no nonempty connected X has |N(X)| <= m+1

  bool passed() const {
    return infeasible && edges_doubled == closed_form_doubled && edges_doubled == term_sum_doubled &&
           empty_certificate.holds && empty_certificate.equality() && only_empty_collection;
  }

  std::string mismatch() const {
    std::ostringstream out;
    if (!infeasible) out << "G_{" << m << "," << k << "} is feasible; ";
    if (edges_doubled != closed_form_doubled) {
      out << "2e=" << edges_doubled << " but closed form gives " << closed_form_doubled << "; ";
    }
    if (edges_doubled != term_sum_doubled) out << "2e=" << edges_doubled << " but term sum gives " << term_sum_doubled << "; ";
    if (!empty_certificate.holds) out << "empty collection does not certify; ";
    if (!empty_certificate.equality()) out << "bound not tight; ";
    if (!only_empty_collection) out << "a nonempty member satisfies the neighbourhood cap; ";
    return out.str();
  }
};

inline GmkAudit gmk_audit(int m, int k) {
  if (m < 1 || k < 0) throw InvalidInput("gmk_audit needs m >= 1, k >= 0");
  const RootedGraph rg = gmk_graph(m, k);
  GmkAudit audit;
  audit.m = m;
  audit.k = k;
  audit.infeasible = !is_feasible(rg);
  audit.edges_doubled = 2 * static_cast<long long>(augment_rooted(rg, {}).edge_count());
  const long long mm = m;
  const long long kk = k;
  audit.closed_form_doubled = 2 * (mm + 1) * (mm + kk + 2) - mm * mm - 3 * mm - 2;
  audit.term_sum_doubled = 2 * ((kk + 1) + mm * (kk + 2) + (mm - 1) * (mm - 2) / 2 + (mm - 1));
  audit.empty_certificate = verify_collection_2mlink(rg, {});
  const detail::BitGraph bg(rg.graph);
  detail::BudgetMeter meter(SearchBudget::unlimited());
  audit.only_empty_collection =
      detail::connected_members(bg, bg.all() & ~detail::to_mask(rg.roots()), m + 1, meter).empty();
  return audit;
}

}  // namespace linkage
