#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkage/bitgraph.hpp"
#include "linkage/errors.hpp"
#include "linkage/graph.hpp"

namespace linkage {

struct SearchBudget {
  std::uint64_t max_nodes_expanded = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t time_limit_ms = std::numeric_limits<std::uint64_t>::max();

  static SearchBudget unlimited() { return {}; }

  void validate() const {
    if (max_nodes_expanded == 0 || time_limit_ms == 0) throw InvalidInput("search budget must be positive");
  }
};

namespace detail {

// Node and wall-clock accounting shared by the exhaustive searches.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget) : budget_(budget) {
    budget.validate();
    if (budget.time_limit_ms != std::numeric_limits<std::uint64_t>::max()) {
      deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget.time_limit_ms);
    }
  }

  // Counts one expanded node; false once the budget is spent.
  bool charge() {
    if (exhausted_) return false;
    if (++nodes_ > budget_.max_nodes_expanded) {
      exhausted_ = true;
      return false;
    }
    if (deadline_ && (nodes_ & 255) == 0 && std::chrono::steady_clock::now() > *deadline_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SearchBudget budget_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

// DFS over induced b1-b2 paths that avoid the a-vertices and `path_forbidden`,
// looking for one whose removal leaves all a-vertices in one component.
// Restricting to induced paths loses nothing: shortcutting a chord only
// shrinks V(B), which can merge components of G - B but never split them.
class LinkageSearch {
 public:
  LinkageSearch(const BitGraph& bg, Mask a_mask, Vertex b1, Vertex b2, Mask path_forbidden, BudgetMeter& meter)
      : bg_(bg), a_(a_mask), b2_(b2), allowed_(bg.all() & ~a_mask & ~path_forbidden), meter_(meter) {
    path_.push_back(b1);
  }

  // The found path, or nullopt (check the meter for budget exhaustion).
  std::optional<std::vector<Vertex>> run() {
    if (!(allowed_ & bit(path_.front())) || !(allowed_ & bit(b2_))) return std::nullopt;
    if (dfs(path_.front(), bit(path_.front()))) return path_;
    return std::nullopt;
  }

 private:
  bool a_together(Mask path) const {
    if (a_ == 0) return true;
    return (bg_.reach(lowest(a_), bg_.all() & ~path) & a_) == a_;
  }

  bool dfs(Vertex cur, Mask path) {
    if (!meter_.charge()) return false;
    if (cur == b2_) return a_together(path);
    // Extending the path only removes more vertices, so separated a's stay separated.
    if (!a_together(path)) return false;
    if (!(bg_.reach(cur, (allowed_ & ~path) | bit(cur)) & bit(b2_))) return false;
    Mask candidates = bg_.adj(cur) & allowed_ & ~path;
    if (candidates & bit(b2_)) candidates = bit(b2_);
    const Mask earlier = path & ~bit(cur);
    while (candidates != 0) {
      const Vertex w = lowest(candidates);
      candidates &= candidates - 1;
      if (bg_.adj(w) & earlier) continue;
      path_.push_back(w);
      if (dfs(w, path | bit(w))) return true;
      if (meter_.exhausted()) return false;
      path_.pop_back();
    }
    return false;
  }

  const BitGraph& bg_;
  Mask a_;
  Vertex b2_;
  Mask allowed_;
  BudgetMeter& meter_;
  std::vector<Vertex> path_;
};

}  // namespace detail

// (A, B): A is connected, contains every a_i and misses B; B is a b1-b2 path.
// For m = 0 the a-part is empty.
struct LinkagePair {
  VertexSet a_part;
  Path b_path;

  friend bool operator==(const LinkagePair&, const LinkagePair&) = default;
};

enum class LinkageStatus { feasible, infeasible, budget_exhausted };

struct LinkageResult {
  LinkageStatus status = LinkageStatus::infeasible;
  std::optional<LinkagePair> pair;
  std::uint64_t nodes_expanded = 0;
};

namespace detail {

inline LinkageResult find_linkage_pair_avoiding(const RootedGraph& rg, Mask path_forbidden,
                                                const SearchBudget& budget) {
  rg.validate();
  const BitGraph bg(rg.graph);
  BudgetMeter meter(budget);
  const Mask a_mask = to_mask(rg.a);
  LinkageSearch search(bg, a_mask, rg.b1, rg.b2, path_forbidden, meter);
  auto path = search.run();
  LinkageResult result;
  result.nodes_expanded = meter.nodes();
  if (path) {
    result.status = LinkageStatus::feasible;
    LinkagePair pair;
    pair.b_path.vertices = std::move(*path);
    if (a_mask != 0) {
      pair.a_part = to_set(bg.reach(lowest(a_mask), bg.all() & ~to_mask(pair.b_path.vertices)));
    }
    result.pair = std::move(pair);
  } else {
    result.status = meter.exhausted() ? LinkageStatus::budget_exhausted : LinkageStatus::infeasible;
  }
  return result;
}

}  // namespace detail

// On success a_part is the whole component of G - B holding the a-vertices.
// `infeasible` is only reported after the search space is exhausted.
inline LinkageResult find_linkage_pair(const RootedGraph& rg, const SearchBudget& budget = {}) {
  return detail::find_linkage_pair_avoiding(rg, 0, budget);
}

inline bool is_feasible(const RootedGraph& rg) {
  return find_linkage_pair(rg).status == LinkageStatus::feasible;
}

// Independent check of the LinkagePair invariants against the host graph.
inline bool is_linkage_pair(const RootedGraph& rg, const LinkagePair& pair) {
  const Graph& g = rg.graph;
  if (!is_path_in(g, pair.b_path)) return false;
  if (pair.b_path.front() != rg.b1 || pair.b_path.back() != rg.b2) return false;
  if (rg.a.empty()) return pair.a_part.empty();
  const VertexSet a_part = make_vertex_set(pair.a_part);
  check_vertex_set(g, a_part);
  if (sets_intersect(a_part, pair.b_path.vertex_set())) return false;
  for (Vertex ai : rg.a) {
    if (!set_contains(a_part, ai)) return false;
  }
  return induces_connected(g, a_part);
}

// Feasible, and every linkage pair's path passes through all of U. For each u
// this asks whether some linkage pair has a path avoiding u, i.e. a linkage
// search with u barred from the path (u may still serve the a-part).
inline bool is_critically_feasible(const RootedGraph& rg, std::span<const Vertex> u_set) {
  rg.validate();
  check_vertex_set(rg.graph, u_set);
  const VertexSet roots = rg.roots();
  for (Vertex u : u_set) {
    if (set_contains(roots, u)) throw InvalidInput("U must avoid the root vertices");
  }
  if (!is_feasible(rg)) return false;
  for (Vertex u : make_vertex_set({u_set.begin(), u_set.end()})) {
    const auto r = detail::find_linkage_pair_avoiding(rg, detail::bit(u), SearchBudget::unlimited());
    if (r.status == LinkageStatus::feasible) return false;
  }
  return true;
}

// Disjoint s1-t1 and s2-t2 paths, or nullopt after exhaustive search.
inline std::optional<std::pair<Path, Path>> two_linkage(const Graph& g, Vertex s1, Vertex t1, Vertex s2,
                                                       Vertex t2) {
  RootedGraph rg{g, {s2, t2}, s1, t1};
  rg.validate();
  const auto r = find_linkage_pair(rg);
  if (r.status != LinkageStatus::feasible) return std::nullopt;
  const Path& first = r.pair->b_path;
  // BFS s2 -> t2 inside the a-part component.
  const detail::BitGraph bg(g);
  const detail::Mask within = detail::to_mask(r.pair->a_part);
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> queue{s2};
  parent[s2] = s2;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    detail::for_each_bit(bg.adj(v) & within, [&](int w) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    });
  }
  Path second;
  for (Vertex v = t2; v != s2; v = parent[v]) second.vertices.push_back(v);
  second.vertices.push_back(s2);
  std::reverse(second.vertices.begin(), second.vertices.end());
  return std::make_pair(first, second);
}

// Drops chords greedily: from each kept vertex jump to the furthest later
// path vertex adjacent to it. The result is an induced path on a subset of
// the original vertices with the same ends.
inline Path shortcut_to_induced(const Graph& g, const Path& p) {
  Path out;
  if (p.empty()) return out;
  std::size_t i = 0;
  out.vertices.push_back(p.vertices[0]);
  while (i + 1 < p.size()) {
    std::size_t next = i + 1;
    for (std::size_t j = p.size() - 1; j > i + 1; --j) {
      if (g.has_edge(p.vertices[i], p.vertices[j])) {
        next = j;
        break;
      }
    }
    out.vertices.push_back(p.vertices[next]);
    i = next;
  }
  return out;
}

enum class RemovableFailure {
  none,
  infeasible,        // no linkage pair exists at all
  budget_exhausted,  // the initial linkage search ran out of budget
  no_interval,       // the attachments of C_t on B do not span an interior vertex
  no_adjacent_component,  // no vertex of B(u1,u2) sees an earlier component
  no_progress,       // the component-size vector failed to increase
};

inline const char* to_string(RemovableFailure f) {
  switch (f) {
    case RemovableFailure::none: return "none";
    case RemovableFailure::infeasible: return "infeasible";
    case RemovableFailure::budget_exhausted: return "budget-exhausted";
    case RemovableFailure::no_interval: return "no-interval";
    case RemovableFailure::no_adjacent_component: return "no-adjacent-component";
    case RemovableFailure::no_progress: return "no-progress";
  }
  return "unknown";
}

struct RemovablePathResult {
  std::optional<Path> path;
  RemovableFailure failure = RemovableFailure::none;
  std::string message;
  int iterations = 0;
  // (|C_1|, |C_2|, ..., |C_t|) for the initial path and after every reroute.
  std::vector<std::vector<int>> size_vectors;

  bool ok() const noexcept { return path.has_value(); }
};

namespace detail {

// Components of G - B with the a-component first and the rest by size
// (descending), ties by smallest vertex. With no a-vertices every component
// is ordered by size.
inline std::vector<Mask> ordered_components(const BitGraph& bg, Mask path, Mask a_mask) {
  std::vector<Mask> comps = bg.components(bg.all() & ~path);
  auto by_size = [](Mask x, Mask y) {
    if (popcount(x) != popcount(y)) return popcount(x) > popcount(y);
    return lowest(x) < lowest(y);
  };
  auto first = comps.begin();
  if (a_mask != 0) {
    auto it = std::find_if(comps.begin(), comps.end(), [&](Mask c) { return (c & a_mask) != 0; });
    std::iter_swap(comps.begin(), it);
    ++first;
  }
  std::sort(first, comps.end(), by_size);
  return comps;
}

inline std::vector<int> size_vector(const std::vector<Mask>& comps) {
  std::vector<int> out;
  out.reserve(comps.size());
  for (Mask c : comps) out.push_back(popcount(c));
  return out;
}

}  // namespace detail

// A b1-b2 path avoiding the a-vertices whose removal leaves G connected.
// Starts from a linkage path made induced, then repeatedly absorbs the last
// component C_t: with u1, u2 the outermost attachments of C_t on B, the
// segment B(u1,u2) is swapped for an induced u1-u2 path through C_t. Each
// step must lexicographically increase the component-size vector; if a step
// has no legal move the result says which one.
inline RemovablePathResult removable_path(const RootedGraph& rg, const SearchBudget& budget = {}) {
  using detail::Mask;
  RemovablePathResult result;
  const auto linkage = find_linkage_pair(rg, budget);
  if (linkage.status == LinkageStatus::infeasible) {
    result.failure = RemovableFailure::infeasible;
    result.message = "rooted graph is infeasible: no b1-b2 path leaves the a-vertices together";
    return result;
  }
  if (linkage.status == LinkageStatus::budget_exhausted) {
    result.failure = RemovableFailure::budget_exhausted;
    result.message = "budget exhausted while searching for an initial linkage path";
    return result;
  }
  const Graph& g = rg.graph;
  const detail::BitGraph bg(g);
  const Mask a_mask = detail::to_mask(rg.a);
  std::vector<Vertex> path = shortcut_to_induced(g, linkage.pair->b_path).vertices;

  auto comps = detail::ordered_components(bg, detail::to_mask(path), a_mask);
  result.size_vectors.push_back(detail::size_vector(comps));
  while (comps.size() >= 2) {
    const Mask last = comps.back();
    const Mask attach = bg.open_nbhd(last);
    std::ptrdiff_t p1 = -1;
    std::ptrdiff_t p2 = -1;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (attach & detail::bit(path[i])) {
        if (p1 < 0) p1 = static_cast<std::ptrdiff_t>(i);
        p2 = static_cast<std::ptrdiff_t>(i);
      }
    }
    if (p1 < 0 || p2 - p1 < 2) {
      result.failure = RemovableFailure::no_interval;
      result.message = "component attaches to the path at fewer than two non-consecutive vertices";
      return result;
    }
    std::size_t best_comp = comps.size();
    for (std::ptrdiff_t i = p1 + 1; i < p2; ++i) {
      for (std::size_t s = 0; s + 1 < comps.size() && s < best_comp; ++s) {
        if (bg.adj(path[i]) & comps[s]) {
          best_comp = s;
          break;
        }
      }
    }
    if (best_comp == comps.size()) {
      result.failure = RemovableFailure::no_adjacent_component;
      result.message = "no interior vertex of B(u1,u2) is adjacent to an earlier component";
      return result;
    }
    // BFS from u1 through C_t to u2; a shortest path is induced.
    const Vertex u1 = path[p1];
    const Vertex u2 = path[p2];
    std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> queue{u1};
    parent[u1] = u1;
    for (std::size_t head = 0; head < queue.size() && parent[u2] < 0; ++head) {
      const Vertex v = queue[head];
      Mask next = bg.adj(v) & last;
      if (v != u1) next |= bg.adj(v) & detail::bit(u2);
      detail::for_each_bit(next, [&](int w) {
        if (parent[w] < 0) {
          parent[w] = v;
          queue.push_back(w);
        }
      });
    }
    std::vector<Vertex> detour;
    for (Vertex v = parent[u2]; v != u1; v = parent[v]) detour.push_back(v);
    std::reverse(detour.begin(), detour.end());
    std::vector<Vertex> rerouted(path.begin(), path.begin() + p1 + 1);
    rerouted.insert(rerouted.end(), detour.begin(), detour.end());
    rerouted.insert(rerouted.end(), path.begin() + p2, path.end());

    auto next_comps = detail::ordered_components(bg, detail::to_mask(rerouted), a_mask);
    auto next_sizes = detail::size_vector(next_comps);
    if (!std::lexicographical_compare(result.size_vectors.back().begin(), result.size_vectors.back().end(),
                                      next_sizes.begin(), next_sizes.end())) {
      result.failure = RemovableFailure::no_progress;
      result.message = "component-size vector did not increase lexicographically";
      return result;
    }
    path = std::move(rerouted);
    comps = std::move(next_comps);
    result.size_vectors.push_back(std::move(next_sizes));
    ++result.iterations;
  }

  Path p{path};
  const Mask rest = bg.all() & ~detail::to_mask(path);
  if (!is_path_in(g, p) || p.front() != rg.b1 || p.back() != rg.b2 || (detail::to_mask(path) & a_mask) != 0 ||
      !bg.connected(rest)) {
    throw std::logic_error("removable_path produced a path violating its postcondition");
  }
  result.path = std::move(p);
  return result;
}

}  // namespace linkage
