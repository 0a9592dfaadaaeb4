#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "linkage/graph.hpp"

namespace linkage {

namespace detail {

// Unit-capacity residual network with every vertex v split into
// in(v) = 2v and out(v) = 2v + 1.
class SplitFlowNetwork {
 public:
  explicit SplitFlowNetwork(const Graph& g) : head_(2 * static_cast<std::size_t>(g.vertex_count()), -1) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) inner_arc_.push_back(add_arc(2 * v, 2 * v + 1, 1));
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, 1);
      add_arc(2 * e.v + 1, 2 * e.u, 1);
    }
    initial_cap_ = cap_;
  }

  // Maximum number of internally disjoint s-t paths, stopping early once
  // `limit` is reached.
  int max_disjoint_paths(Vertex s, Vertex t, int limit) {
    cap_ = initial_cap_;
    cap_[inner_arc_[s]] = kInfinite;
    cap_[inner_arc_[t]] = kInfinite;
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent_arc(head_.size());
    while (flow < limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::queue<int> q;
      q.push(source);
      parent_arc[source] = -2;
      while (!q.empty() && parent_arc[sink] == -1) {
        int x = q.front();
        q.pop();
        for (int a = head_[x]; a >= 0; a = next_[a]) {
          if (cap_[a] > 0 && parent_arc[to_[a]] == -1) {
            parent_arc[to_[a]] = a;
            q.push(to_[a]);
          }
        }
      }
      if (parent_arc[sink] == -1) break;
      for (int x = sink; x != source; x = to_[parent_arc[x] ^ 1]) {
        cap_[parent_arc[x]] -= 1;
        cap_[parent_arc[x] ^ 1] += 1;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 2;

  int add_arc(int from, int to, int cap) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = id;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
    return id;
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
  std::vector<int> initial_cap_;
  std::vector<int> inner_arc_;
};

}  // namespace detail

// Number of internally disjoint s-t paths for non-adjacent s, t.
inline int local_connectivity(const Graph& g, Vertex s, Vertex t) {
  if (s == t || g.has_edge(s, t)) throw InvalidInput("local connectivity needs distinct non-adjacent vertices");
  detail::SplitFlowNetwork net(g);
  return net.max_disjoint_paths(s, t, g.vertex_count());
}

// Minimum over non-adjacent pairs of the local connectivity; n - 1 for
// complete graphs (and 0 for the null graph).
inline int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::max(n - 1, 0);
  for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  if (best == 0) return 0;
  detail::SplitFlowNetwork net(g);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, net.max_disjoint_paths(s, t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

inline bool is_k_connected(const Graph& g, int k) { return vertex_connectivity(g) >= k; }

}  // namespace linkage
