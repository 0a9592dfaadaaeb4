#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "linkage/bitgraph.hpp"
#include "linkage/errors.hpp"
#include "linkage/graph.hpp"

namespace linkage {

// Largest order for which canonical codes fit in 64 bits.
inline constexpr int kMaxCanonicalVertices = 11;

namespace detail {

// Colour refinement seeded by degree; colours are ranks of sorted signatures,
// so the final colouring is isomorphism invariant.
inline std::vector<int> refine_colours(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[v] = popcount(adj[v]);
  for (int classes = -1;;) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      signature[v].push_back(colour[v]);
      std::vector<int> nb;
      for_each_bit(adj[v], [&](int w) { nb.push_back(colour[w]); });
      std::sort(nb.begin(), nb.end());
      signature[v].insert(signature[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) colour[v] = rank[signature[v]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

}  // namespace detail

// Canonical code of g: the largest upper-triangle bit string (graph6 pair
// order) over all vertex orderings that list colour classes in rank order.
// Two graphs are isomorphic iff their codes (and orders) agree.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCanonicalVertices) throw InvalidInput("canonical codes support at most 11 vertices");
  const detail::BitGraph bg(g);
  std::vector<detail::Mask> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[v] = bg.adj(v);
  const std::vector<int> colour = detail::refine_colours(adj);
  std::vector<int> slot_colour(colour);
  std::sort(slot_colour.begin(), slot_colour.end());

  std::uint64_t best = 0;
  bool have_best = false;
  std::vector<int> order(static_cast<std::size_t>(n));
  const int total = n * (n - 1) / 2;
  // Orderings whose code prefix is already below best's are cut off.
  auto place = [&](auto&& self, int pos, detail::Mask used, std::uint64_t code) -> void {
    if (pos == n) {
      if (!have_best || code > best) {
        best = code;
        have_best = true;
      }
      return;
    }
    const int prefix = (pos + 1) * pos / 2;
    for (int v = 0; v < n; ++v) {
      if ((used & detail::bit(v)) || colour[v] != slot_colour[pos]) continue;
      std::uint64_t bits = 0;
      for (int i = 0; i < pos; ++i) bits = (bits << 1) | ((adj[order[i]] >> v) & 1);
      const std::uint64_t next = (code << pos) | bits;
      if (have_best && next < (best >> (total - prefix))) continue;
      order[pos] = v;
      self(self, pos + 1, used | detail::bit(v), next);
    }
  };
  place(place, 0, 0, 0);
  return best;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

// One representative (in canonical labelling) of every isomorphism class of
// graphs on exactly n vertices, in increasing code order.
inline std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 0 || n > kMaxCanonicalVertices) throw InvalidInput("graph enumeration supports 0..11 vertices");
  std::vector<std::uint64_t> level{0};
  for (int order = 2; order <= n; ++order) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t code : level) {
      const Graph base = graph_from_code(order - 1, code);
      for (detail::Mask nb = 0; nb < (detail::Mask{1} << (order - 1)); ++nb) {
        Graph g(order);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        detail::for_each_bit(nb, [&](int v) { g.add_edge(v, order - 1); });
        seen.insert(canonical_code(g));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace linkage
