#pragma once

// Brute-force references for the test suites. Nothing here uses the bitmask
// engines, flow code or Boost that the library relies on.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "linkage/graph.hpp"

namespace linkage::oracle {

using Adjacency = std::vector<std::vector<Vertex>>;

inline Adjacency adjacency(const Graph& g) {
  Adjacency adj(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Label of each vertex's component in g - removed (-1 for removed vertices).
inline std::vector<int> component_labels(const Adjacency& adj, const std::vector<char>& removed) {
  std::vector<int> label(adj.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (removed[s] || label[s] >= 0) continue;
    std::vector<std::size_t> queue{s};
    label[s] = next;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (Vertex w : adj[queue[h]]) {
        if (!removed[w] && label[w] < 0) {
          label[w] = next;
          queue.push_back(static_cast<std::size_t>(w));
        }
      }
    }
    ++next;
  }
  return label;
}

// Calls visit(path) for every simple s-t path; stops when visit returns true.
inline bool for_each_simple_path(const Adjacency& adj, Vertex s, Vertex t,
                                 const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> path{s};
  std::vector<char> on(adj.size(), 0);
  on[s] = 1;
  std::function<bool(Vertex)> rec = [&](Vertex v) -> bool {
    if (v == t) return visit(path);
    for (Vertex w : adj[v]) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      if (rec(w)) return true;
      path.pop_back();
      on[w] = 0;
    }
    return false;
  };
  return rec(s);
}

// Whether path P works as the B of a linkage pair: misses every a_i and
// leaves them in one component of G - P.
inline bool path_links(const Adjacency& adj, const RootedGraph& rg, const std::vector<Vertex>& path) {
  std::vector<char> removed(adj.size(), 0);
  for (Vertex v : path) removed[v] = 1;
  for (Vertex ai : rg.a) {
    if (removed[ai]) return false;
  }
  if (rg.a.empty()) return true;
  const auto label = component_labels(adj, removed);
  for (Vertex ai : rg.a) {
    if (label[ai] != label[rg.a.front()]) return false;
  }
  return true;
}

inline bool naive_feasible(const RootedGraph& rg) {
  const Adjacency adj = adjacency(rg.graph);
  return for_each_simple_path(adj, rg.b1, rg.b2, [&](const std::vector<Vertex>& p) { return path_links(adj, rg, p); });
}

// Literal definition: feasible, and every linkage pair's path contains U.
inline bool naive_critically_feasible(const RootedGraph& rg, const std::vector<Vertex>& u) {
  const Adjacency adj = adjacency(rg.graph);
  bool any = false;
  bool all_contain = true;
  for_each_simple_path(adj, rg.b1, rg.b2, [&](const std::vector<Vertex>& p) {
    if (!path_links(adj, rg, p)) return false;
    any = true;
    for (Vertex x : u) {
      if (std::find(p.begin(), p.end(), x) == p.end()) all_contain = false;
    }
    return !all_contain;
  });
  return any && all_contain;
}

inline bool naive_two_linkage(const Graph& g, Vertex s1, Vertex t1, Vertex s2, Vertex t2) {
  const Adjacency adj = adjacency(g);
  return for_each_simple_path(adj, s1, t1, [&](const std::vector<Vertex>& p1) {
    std::set<Vertex> used(p1.begin(), p1.end());
    return for_each_simple_path(adj, s2, t2, [&](const std::vector<Vertex>& p2) {
      return std::none_of(p2.begin(), p2.end(), [&](Vertex v) { return used.count(v) > 0; });
    });
  });
}

// Smallest vertex set whose removal leaves >= 2 components; n - 1 when no
// such set exists (complete graphs).
inline int brute_force_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  const Adjacency adj = adjacency(g);
  int best = std::max(n - 1, 0);
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    const int size = __builtin_popcount(bits);
    if (size >= best || n - size < 2) continue;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) removed[v] = (bits >> v) & 1;
    const auto label = component_labels(adj, removed);
    if (*std::max_element(label.begin(), label.end()) >= 1) best = size;
  }
  return best;
}

namespace rotation_detail {

// Faces of a (partial) rotation system. succ[v][i] is the position in
// adj[v] that follows position i around v; unassigned vertices have empty succ.
struct FaceCount {
  int closed = 0;
  int darts_in_closed = 0;
};

// Dart tables for face tracing: back[v][i] is the position of v in
// adj[adj[v][i]], and base[v] numbers the darts leaving v consecutively.
struct Darts {
  std::vector<std::vector<int>> back;
  std::vector<int> base;
  int total = 0;

  explicit Darts(const Adjacency& adj) : back(adj.size()), base(adj.size(), 0) {
    for (std::size_t v = 0; v < adj.size(); ++v) {
      base[v] = total;
      total += static_cast<int>(adj[v].size());
      for (Vertex w : adj[v]) {
        const auto& nw = adj[w];
        back[v].push_back(static_cast<int>(std::find(nw.begin(), nw.end(), static_cast<Vertex>(v)) - nw.begin()));
      }
    }
  }
};

inline FaceCount trace(const Adjacency& adj, const Darts& darts, const std::vector<std::vector<int>>& succ,
                       std::vector<char>& used) {
  FaceCount out;
  used.assign(static_cast<std::size_t>(darts.total), 0);
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::size_t i = 0; i < adj[u].size(); ++i) {
      if (used[darts.base[u] + i]) continue;
      // Dart u -> adj[u][i]; next dart leaves v towards succ_v(u).
      Vertex cu = static_cast<Vertex>(u);
      int ci = static_cast<int>(i);
      int length = 0;
      bool closed = false;
      while (!used[darts.base[cu] + ci]) {
        used[darts.base[cu] + ci] = 1;
        ++length;
        const Vertex v = adj[cu][ci];
        if (succ[v].empty()) break;
        ci = succ[v][darts.back[cu][ci]];
        cu = v;
        if (cu == static_cast<Vertex>(u) && ci == static_cast<int>(i)) {
          closed = true;
          break;
        }
      }
      // Open walks stay marked so tracing is linear; they are never counted.
      if (closed) {
        ++out.closed;
        out.darts_in_closed += length;
      }
    }
  }
  return out;
}

inline FaceCount trace(const Adjacency& adj, const std::vector<std::vector<int>>& succ) {
  std::vector<char> used;
  return trace(adj, Darts(adj), succ, used);
}

}  // namespace rotation_detail

// Deletes degree <= 1 vertices and smooths degree-2 vertices (merging a
// resulting parallel edge) until neither applies; planarity is unchanged.
inline Adjacency reduce_for_planarity(Adjacency adj) {
  const std::size_t n = adj.size();
  std::vector<std::set<Vertex>> nb(n);
  for (std::size_t v = 0; v < n; ++v) nb[v].insert(adj[v].begin(), adj[v].end());
  std::vector<char> alive(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (!alive[x] || nb[x].size() > 2) continue;
      const std::vector<Vertex> around(nb[x].begin(), nb[x].end());
      for (Vertex w : around) nb[w].erase(static_cast<Vertex>(x));
      nb[x].clear();
      alive[x] = 0;
      if (around.size() == 2) {
        nb[around[0]].insert(around[1]);
        nb[around[1]].insert(around[0]);
      }
      changed = true;
    }
  }
  std::vector<Vertex> id(n, -1);
  Vertex next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) id[v] = next++;
  }
  Adjacency out(static_cast<std::size_t>(next));
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (Vertex w : nb[v]) out[id[v]].push_back(id[w]);
  }
  return out;
}

// Planarity of a connected multigraph-free adjacency with min degree >= 3 by
// searching rotation systems for one with e - v + 2 faces.
inline bool connected_rotation_planar(const Adjacency& adj) {
  const int v = static_cast<int>(adj.size());
  int twice_e = 0;
  for (const auto& nb : adj) twice_e += static_cast<int>(nb.size());
  const int e = twice_e / 2;
  if (v <= 4) return true;
  if (e > 3 * v - 6) return false;
  const int target = e - v + 2;
  // Assign vertices in BFS order so closed faces appear early.
  std::vector<Vertex> order{0};
  std::vector<char> seen(adj.size(), 0);
  seen[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h) {
    for (Vertex w : adj[order[h]]) {
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
  const rotation_detail::Darts darts(adj);
  std::vector<char> used;
  std::vector<std::vector<int>> succ(adj.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
    const auto faces = rotation_detail::trace(adj, darts, succ, used);
    if (faces.closed + (twice_e - faces.darts_in_closed) / 3 < target) return false;
    if (idx == order.size()) return faces.closed == target;
    const Vertex x = order[idx];
    const int d = static_cast<int>(adj[x].size());
    std::vector<int> cyc(static_cast<std::size_t>(d));
    std::iota(cyc.begin(), cyc.end(), 0);
    // cyc[0] fixed; permute the rest. Reversing every rotation mirrors the
    // faces, so the first vertex needs only one orientation.
    do {
      if (idx == 0 && d >= 3 && cyc[1] > cyc[d - 1]) continue;
      succ[x].assign(static_cast<std::size_t>(d), 0);
      for (int i = 0; i < d; ++i) succ[x][cyc[i]] = cyc[(i + 1) % d];
      if (rec(idx + 1)) return true;
    } while (std::next_permutation(cyc.begin() + 1, cyc.end()));
    succ[x].clear();
    return false;
  };
  return rec(0);
}

inline bool rotation_system_planar(const Graph& g) {
  const Adjacency adj = adjacency(g);
  const Adjacency reduced = reduce_for_planarity(adj);
  // Planar iff every component is.
  std::vector<char> removed(reduced.size(), 0);
  const auto label = component_labels(reduced, removed);
  const int comps = reduced.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  for (int c = 0; c < comps; ++c) {
    std::vector<Vertex> id(reduced.size(), -1);
    Vertex next = 0;
    for (std::size_t v = 0; v < reduced.size(); ++v) {
      if (label[v] == c) id[v] = next++;
    }
    Adjacency part(static_cast<std::size_t>(next));
    for (std::size_t v = 0; v < reduced.size(); ++v) {
      if (label[v] != c) continue;
      for (Vertex w : reduced[v]) part[id[v]].push_back(id[w]);
    }
    if (!connected_rotation_planar(part)) return false;
  }
  return true;
}

// Disc planarity of a connected graph by brute force: some rotation system
// has e - v + 2 faces and one face walk meets the boundary vertices in the
// given cyclic order.
inline bool brute_force_disc_planar(const Graph& g, const std::vector<Vertex>& boundary) {
  const Adjacency adj = adjacency(g);
  const int v = static_cast<int>(adj.size());
  int twice_e = 0;
  for (const auto& nb : adj) twice_e += static_cast<int>(nb.size());
  const int target = twice_e / 2 - v + 2;
  std::vector<std::vector<int>> succ(adj.size());
  auto face_walks = [&]() {
    std::vector<std::vector<Vertex>> walks;
    std::vector<std::vector<char>> used(adj.size());
    for (std::size_t x = 0; x < adj.size(); ++x) used[x].assign(adj[x].size(), 0);
    for (std::size_t u = 0; u < adj.size(); ++u) {
      for (std::size_t i = 0; i < adj[u].size(); ++i) {
        if (used[u][i]) continue;
        std::vector<Vertex> walk;
        Vertex cu = static_cast<Vertex>(u);
        int ci = static_cast<int>(i);
        while (!used[cu][ci]) {
          used[cu][ci] = 1;
          walk.push_back(cu);
          const Vertex w = adj[cu][ci];
          const int back = static_cast<int>(std::find(adj[w].begin(), adj[w].end(), cu) - adj[w].begin());
          ci = succ[w][back];
          cu = w;
        }
        walks.push_back(walk);
      }
    }
    return walks;
  };
  auto walk_has_order = [&](const std::vector<Vertex>& walk) {
    if (boundary.empty()) return true;
    const std::size_t len = walk.size();
    for (std::size_t start = 0; start < len; ++start) {
      if (walk[start] != boundary[0]) continue;
      std::size_t k = 1;
      for (std::size_t step = 1; step < len && k < boundary.size(); ++step) {
        if (walk[(start + step) % len] == boundary[k]) ++k;
      }
      if (k == boundary.size()) return true;
    }
    return false;
  };
  std::function<bool(int)> rec = [&](int x) -> bool {
    if (x == v) {
      const auto walks = face_walks();
      if (static_cast<int>(walks.size()) != target) return false;
      if (twice_e == 0) return boundary.size() <= 1;
      return std::any_of(walks.begin(), walks.end(), walk_has_order);
    }
    const int d = static_cast<int>(adj[x].size());
    if (d == 0) return rec(x + 1);
    std::vector<int> cyc(static_cast<std::size_t>(d));
    std::iota(cyc.begin(), cyc.end(), 0);
    do {
      succ[x].assign(static_cast<std::size_t>(d), 0);
      for (int i = 0; i < d; ++i) succ[x][cyc[i]] = cyc[(i + 1) % d];
      if (rec(x + 1)) return true;
    } while (std::next_permutation(cyc.begin() + 1, cyc.end()));
    return false;
  };
  return rec(0);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      if (coin(rng)) g.add_edge(u, w);
    }
  }
  return g;
}

}  // namespace linkage::oracle
