#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "linkage/bitgraph.hpp"
#include "linkage/collection.hpp"
#include "linkage/feasibility.hpp"

namespace linkage::detail {

struct Member {
  Mask set = 0;
  Mask nbhd = 0;
};

// Every nonempty connected X ⊆ allowed with |N(X)| <= cap, ordered by size and
// then by sorted vertex list. Stops early (returning a partial list) when the
// meter runs out.
inline std::vector<Member> connected_members(const BitGraph& bg, Mask allowed, int cap, BudgetMeter& meter) {
  std::vector<Member> out;
  // Sets whose minimum is `root`: branch on the lowest candidate w, first
  // including it, then banning it for the remaining siblings.
  auto grow = [&](auto&& self, Mask set, Mask candidates, Mask banned, Mask pool) -> void {
    if (!meter.charge()) return;
    const Mask nb = bg.open_nbhd(set);
    if (popcount(nb) <= cap) out.push_back({set, nb});
    while (candidates != 0) {
      const Vertex w = lowest(candidates);
      candidates &= candidates - 1;
      const Mask grown = set | bit(w);
      self(self, grown, (candidates | bg.adj(w)) & pool & ~grown & ~banned, banned, pool);
      if (meter.exhausted()) return;
      banned |= bit(w);
    }
  };
  for_each_bit(allowed, [&](int root) {
    if (meter.exhausted()) return;
    const Mask pool = allowed & ~((bit(root) << 1) - 1);
    grow(grow, bit(root), bg.adj(root) & pool, 0, pool);
  });
  std::stable_sort(out.begin(), out.end(), [](const Member& x, const Member& y) {
    if (popcount(x.set) != popcount(y.set)) return popcount(x.set) < popcount(y.set);
    return to_set(x.set) < to_set(y.set);
  });
  return out;
}

// Pre-order DFS over every subfamily of `members` that is an S-collection
// (pairwise N[X1] ∩ X2 = ∅), starting with the empty family. `visit` gets the
// current family and returns true to stop. Returns true when stopped by visit.
template <typename Visit>
bool for_each_family(std::span<const Member> members, BudgetMeter& meter, Visit&& visit) {
  std::vector<Member> family;
  auto dfs = [&](auto&& self, std::size_t start, Mask covered) -> bool {
    if (!meter.charge()) return false;
    if (visit(std::span<const Member>(family))) return true;
    for (std::size_t i = start; i < members.size(); ++i) {
      const Member& x = members[i];
      if (((x.set | x.nbhd) & covered) != 0) continue;
      family.push_back(x);
      if (self(self, i + 1, covered | x.set)) return true;
      family.pop_back();
      if (meter.exhausted()) return false;
    }
    return false;
  };
  return dfs(dfs, 0, 0);
}

// v(G/𝒳) and e(𝒢/𝒳) for a family, using masks. `root_pairs` lists the extra
// edges of the augmented graph (empty for plain G/𝒳).
struct ContractedCounts {
  int vertices = 0;
  long long edges = 0;
};

inline ContractedCounts contracted_counts(const BitGraph& bg, std::span<const Member> family,
                                          std::span<const std::pair<Vertex, Vertex>> root_pairs) {
  Mask covered = 0;
  for (const Member& x : family) covered |= x.set;
  const Mask survivors = bg.all() & ~covered;
  std::vector<Mask> adj(static_cast<std::size_t>(bg.size()), 0);
  for_each_bit(survivors, [&](int v) { adj[v] = bg.adj(v) & survivors; });
  for (const Member& x : family) {
    for_each_bit(x.nbhd, [&](int v) { adj[v] |= x.nbhd & ~bit(v); });
  }
  for (auto [u, v] : root_pairs) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  long long degree_sum = 0;
  for_each_bit(survivors, [&](int v) { degree_sum += popcount(adj[v]); });
  return {popcount(survivors), degree_sum / 2};
}

inline std::vector<std::pair<Vertex, Vertex>> augmenting_pairs(const RootedGraph& rg) {
  std::vector<Vertex> roots = rg.a;
  roots.push_back(rg.b1);
  roots.push_back(rg.b2);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const bool is_b_pair = (roots[i] == rg.b1 && roots[j] == rg.b2) || (roots[i] == rg.b2 && roots[j] == rg.b1);
      if (!is_b_pair) out.emplace_back(roots[i], roots[j]);
    }
  }
  return out;
}

inline Collection to_collection(std::span<const Member> family) {
  Collection c;
  for (const Member& x : family) c.members.push_back(to_set(x.set));
  return c.normalized();
}

}  // namespace linkage::detail
