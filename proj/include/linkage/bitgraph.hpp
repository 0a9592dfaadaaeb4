#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkage/errors.hpp"
#include "linkage/graph.hpp"

namespace linkage {

// The exhaustive searches work on adjacency bitmasks and are limited to this
// many vertices.
inline constexpr int kMaxSearchVertices = 64;

namespace detail {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

constexpr int popcount(Mask m) { return std::popcount(m); }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

inline Mask to_mask(std::span<const Vertex> s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

inline VertexSet to_set(Mask m) {
  VertexSet out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

// Adjacency-mask view of a Graph with at most 64 vertices.
class BitGraph {
 public:
  explicit BitGraph(const Graph& g) : n_(g.vertex_count()) {
    if (n_ > kMaxSearchVertices) {
      throw InvalidInput("search supports at most " + std::to_string(kMaxSearchVertices) +
                         " vertices, got " + std::to_string(n_));
    }
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) adj_[v] |= bit(w);
    }
  }

  int size() const noexcept { return n_; }
  Mask all() const noexcept { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  Mask adj(Vertex v) const noexcept { return adj_[v]; }

  Mask open_nbhd(Mask s) const noexcept {
    Mask out = 0;
    for_each_bit(s, [&](int v) { out |= adj_[v]; });
    return out & ~s;
  }

  // Vertices reachable from `from` inside `within` (from must lie in within).
  Mask reach(Vertex from, Mask within) const noexcept {
    Mask seen = bit(from);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= adj_[v]; });
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  // Components of the subgraph induced by `within`, by smallest vertex.
  std::vector<Mask> components(Mask within) const {
    std::vector<Mask> out;
    while (within != 0) {
      Mask c = reach(lowest(within), within);
      out.push_back(c);
      within &= ~c;
    }
    return out;
  }

  bool connected(Mask within) const {
    return within == 0 || reach(lowest(within), within) == within;
  }

 private:
  int n_;
  std::vector<Mask> adj_;
};

}  // namespace detail
}  // namespace linkage
