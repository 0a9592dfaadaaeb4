#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linkage/errors.hpp"

namespace linkage {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids. Every function in this library
// that returns a vertex set returns it in this canonical form.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline bool set_contains(std::span<const Vertex> s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool sets_intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on the vertex ids [0, vertex_count).
class Graph {
 public:
  Graph() = default;

  explicit Graph(int vertex_count) {
    if (vertex_count < 0) throw InvalidInput("negative vertex count");
    adj_.resize(static_cast<std::size_t>(vertex_count));
  }

  Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(vertex_count) {
    for (auto [u, v] : edges) {
      if (!add_edge(u, v)) throw InvalidInput("duplicate edge");
    }
  }

  static Graph from_edges(int vertex_count, std::span<const Edge> edges) {
    Graph g(vertex_count);
    for (const Edge& e : edges) {
      if (!g.add_edge(e.u, e.v)) throw InvalidInput("duplicate edge");
    }
    return g;
  }

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return set_contains(adj_[u], v);
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  // Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  // Returns false when the edge is already present.
  bool add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (!contains(v)) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(vertex_count()) + ")");
    }
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

inline void check_vertex_set(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(g.vertex_count()) + ")");
    }
  }
}

// N_G(s): vertices outside s with a neighbour in s.
inline VertexSet neighborhood(const Graph& g, std::span<const Vertex> s) {
  check_vertex_set(g, s);
  std::vector<char> in_s(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) in_s[v] = 1;
  std::vector<char> mark(in_s.size(), 0);
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_s[w]) mark[w] = 1;
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

inline VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s) {
  return set_union(neighborhood(g, s), make_vertex_set({s.begin(), s.end()}));
}

// Components of g - removed, ordered by smallest vertex id.
inline std::vector<VertexSet> components_avoiding(const Graph& g,
                                                  std::span<const Vertex> removed) {
  check_vertex_set(g, removed);
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (Vertex v : removed) label[v] = -2;
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == -1) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

inline std::vector<VertexSet> components(const Graph& g) { return components_avoiding(g, {}); }

// The null graph counts as connected.
inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline bool induces_connected(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) return true;
  check_vertex_set(g, s);
  std::vector<char> in_s(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) in_s[v] = 1;
  std::vector<Vertex> stack{s.front()};
  in_s[s.front()] = 2;
  std::size_t seen = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (in_s[w] == 1) {
        in_s[w] = 2;
        ++seen;
        stack.push_back(w);
      }
    }
  }
  return seen == make_vertex_set({s.begin(), s.end()}).size();
}

// A subgraph with dense ids plus the maps in both directions. to_new[v] is -1
// for vertices that were dropped.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> to_new;
  std::vector<Vertex> to_old;
};

inline Relabeled induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  check_vertex_set(g, keep);
  Relabeled r;
  r.to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v : make_vertex_set({keep.begin(), keep.end()})) {
    r.to_new[v] = static_cast<Vertex>(r.to_old.size());
    r.to_old.push_back(v);
  }
  r.graph = Graph(static_cast<int>(r.to_old.size()));
  for (const Edge& e : g.edges()) {
    if (r.to_new[e.u] >= 0 && r.to_new[e.v] >= 0) r.graph.add_edge(r.to_new[e.u], r.to_new[e.v]);
  }
  return r;
}

inline Relabeled delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  check_vertex_set(g, removed);
  VertexSet all(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return induced_subgraph(g, set_difference(all, make_vertex_set({removed.begin(), removed.end()})));
}

// Interval selectors for Path::segment: B[u,v], B(u,v), B[u,v), B(u,v].
enum class Ends { closed, open, closed_open, open_closed };

struct Path {
  std::vector<Vertex> vertices;

  bool empty() const noexcept { return vertices.empty(); }
  std::size_t size() const noexcept { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  std::ptrdiff_t position(Vertex v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : it - vertices.begin();
  }

  bool contains(Vertex v) const { return position(v) >= 0; }

  VertexSet vertex_set() const { return make_vertex_set(vertices); }

  // Subpath from u to v in travel order from u; both must lie on the path.
  std::vector<Vertex> segment(Vertex u, Vertex v, Ends ends = Ends::closed) const {
    const auto pu = position(u);
    const auto pv = position(v);
    if (pu < 0 || pv < 0) throw InvalidInput("segment endpoint not on path");
    const bool keep_u = ends == Ends::closed || ends == Ends::closed_open;
    const bool keep_v = ends == Ends::closed || ends == Ends::open_closed;
    std::vector<Vertex> out;
    const std::ptrdiff_t step = pu <= pv ? 1 : -1;
    for (std::ptrdiff_t i = pu;; i += step) {
      if ((i != pu || keep_u) && (i != pv || keep_v)) out.push_back(vertices[i]);
      if (i == pv) break;
    }
    return out;
  }

  friend bool operator==(const Path&, const Path&) = default;
};

// True iff p is a simple path of g (distinct vertices, consecutive ones adjacent).
inline bool is_path_in(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Vertex v = p.vertices[i];
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
  }
  return true;
}

inline bool is_induced_path_in(const Graph& g, const Path& p) {
  if (!is_path_in(g, p)) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 2; j < p.size(); ++j) {
      if (g.has_edge(p.vertices[i], p.vertices[j])) return false;
    }
  }
  return true;
}

// (G, {a_1..a_m}, b1, b2). The a-list keeps the caller's order; a_m is
// distinguished only by the G_{m,k} generator.
struct RootedGraph {
  Graph graph;
  std::vector<Vertex> a;
  Vertex b1 = 0;
  Vertex b2 = 1;

  int m() const noexcept { return static_cast<int>(a.size()); }

  VertexSet a_set() const { return make_vertex_set(a); }

  VertexSet roots() const {
    std::vector<Vertex> r = a;
    r.push_back(b1);
    r.push_back(b2);
    return make_vertex_set(std::move(r));
  }

  void validate() const {
    std::vector<Vertex> r = a;
    r.push_back(b1);
    r.push_back(b2);
    check_vertex_set(graph, r);
    if (make_vertex_set(r).size() != r.size()) throw InvalidInput("root vertices must be distinct");
  }
};

// Removes u from a rooted graph, relabelling the survivors densely.
inline RootedGraph delete_vertex(const RootedGraph& rg, Vertex u) {
  const Vertex removed[] = {u};
  Relabeled r = delete_vertices(rg.graph, removed);
  RootedGraph out;
  out.graph = std::move(r.graph);
  for (Vertex ai : rg.a) {
    if (ai == u) throw InvalidInput("cannot delete a root vertex");
    out.a.push_back(r.to_new[ai]);
  }
  if (rg.b1 == u || rg.b2 == u) throw InvalidInput("cannot delete a root vertex");
  out.b1 = r.to_new[rg.b1];
  out.b2 = r.to_new[rg.b2];
  return out;
}

}  // namespace linkage
