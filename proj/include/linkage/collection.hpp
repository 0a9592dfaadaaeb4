#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linkage/errors.hpp"
#include "linkage/graph.hpp"

namespace linkage {

// A family of vertex sets, the 𝒳 of G/𝒳. Validity (pairwise N[X1] ∩ X2 = ∅,
// no member meets the forbidden set S) is relative to a graph and an S, so it
// is checked by the functions below rather than by the type.
struct Collection {
  std::vector<VertexSet> members;

  // Members sorted, empty members dropped.
  Collection normalized() const {
    Collection out;
    for (const auto& x : members) {
      if (!x.empty()) out.members.push_back(make_vertex_set(x));
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
  }

  std::size_t covered() const {
    std::size_t total = 0;
    for (const auto& x : members) total += make_vertex_set(x).size();
    return total;
  }

  friend bool operator==(const Collection&, const Collection&) = default;
};

// Reason the collection is invalid, or nullopt when it is an S-collection.
inline std::optional<std::string> collection_violation(const Graph& g,
                                                       std::span<const Vertex> forbidden,
                                                       const Collection& x) {
  const int n = g.vertex_count();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<char> is_forbidden(static_cast<std::size_t>(n), 0);
  for (Vertex s : forbidden) {
    if (!g.contains(s)) return "forbidden vertex " + std::to_string(s) + " out of range";
    is_forbidden[s] = 1;
  }
  const Collection norm = x.normalized();
  for (std::size_t i = 0; i < norm.members.size(); ++i) {
    for (Vertex v : norm.members[i]) {
      if (!g.contains(v)) return "member vertex " + std::to_string(v) + " out of range";
      if (is_forbidden[v]) return "member contains forbidden vertex " + std::to_string(v);
      if (owner[v] >= 0) return "vertex " + std::to_string(v) + " lies in two members";
      owner[v] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < norm.members.size(); ++i) {
    for (Vertex v : norm.members[i]) {
      for (Vertex w : g.neighbors(v)) {
        if (owner[w] >= 0 && owner[w] != static_cast<int>(i)) {
          return "members are adjacent via edge " + std::to_string(v) + "-" + std::to_string(w);
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_collection(const Graph& g, std::span<const Vertex> forbidden, const Collection& x) {
  return !collection_violation(g, forbidden, x).has_value();
}

inline void validate_collection(const Graph& g, std::span<const Vertex> forbidden,
                                const Collection& x) {
  if (auto why = collection_violation(g, forbidden, x)) throw InvalidCollection(*why);
}

// Replaces every member by the vertex sets of the components it induces.
// The result is still a collection for the same S, no |N(X)| grows, and
// e(G/𝒳) does not grow.
inline Collection split_into_connected(const Graph& g, const Collection& x) {
  Collection out;
  for (const auto& member : x.normalized().members) {
    Relabeled sub = induced_subgraph(g, member);
    for (const auto& comp : components(sub.graph)) {
      VertexSet piece;
      for (Vertex v : comp) piece.push_back(sub.to_old[v]);
      out.members.push_back(make_vertex_set(std::move(piece)));
    }
  }
  return out.normalized();
}

// G/𝒳 together with the relabelling of the surviving vertices (to_new[v] is
// -1 for contracted vertices).
struct Contraction {
  Graph graph;
  std::vector<Vertex> to_new;
  std::vector<Vertex> to_old;
};

inline Contraction contract_collection(const Graph& g, const Collection& x) {
  validate_collection(g, {}, x);
  const Collection norm = x.normalized();
  std::vector<Vertex> removed;
  for (const auto& member : norm.members) removed.insert(removed.end(), member.begin(), member.end());
  Relabeled kept = delete_vertices(g, removed);
  Contraction c{std::move(kept.graph), std::move(kept.to_new), std::move(kept.to_old)};
  for (const auto& member : norm.members) {
    const VertexSet nb = neighborhood(g, member);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        c.graph.add_edge(c.to_new[nb[i]], c.to_new[nb[j]]);
      }
    }
  }
  return c;
}

// 𝒢/𝒳: G/𝒳 plus every edge among the roots except b1b2.
inline Contraction augmented_contraction(const RootedGraph& rg, const Collection& x,
                                         std::span<const Vertex> forbidden) {
  rg.validate();
  validate_collection(rg.graph, forbidden, x);
  Contraction c = contract_collection(rg.graph, x);
  std::vector<Vertex> roots = rg.a;
  roots.push_back(rg.b1);
  roots.push_back(rg.b2);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Vertex u = roots[i];
      const Vertex v = roots[j];
      const bool is_b_pair = (u == rg.b1 && v == rg.b2) || (u == rg.b2 && v == rg.b1);
      if (!is_b_pair) c.graph.add_edge(c.to_new[u], c.to_new[v]);
    }
  }
  return c;
}

inline Contraction augmented_contraction(const RootedGraph& rg, const Collection& x) {
  return augmented_contraction(rg, x, rg.roots());
}

inline Graph augment_rooted(const RootedGraph& rg, const Collection& x) {
  return augmented_contraction(rg, x).graph;
}

}  // namespace linkage
