#include <gtest/gtest.h>

#include <random>

#include "linkage/certificates.hpp"
#include "linkage/enumerate.hpp"
#include "linkage/io.hpp"
#include "oracles.hpp"

namespace linkage {
namespace {

// 2 e(𝒢/𝒳) from an adjacency matrix, built without the library's contraction.
long long doubled_augmented_edges(const RootedGraph& rg, const Collection& x) {
  const int n = rg.graph.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : rg.graph.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<char> gone(n, 0);
  for (const auto& member : x.members) {
    std::vector<char> nb(n, 0);
    for (Vertex v : member) {
      for (Vertex w = 0; w < n; ++w) {
        if (adj[v][w]) nb[w] = 1;
      }
    }
    for (Vertex v : member) nb[v] = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex w = 0; w < n; ++w) {
        if (u != w && nb[u] && nb[w]) adj[u][w] = 1;
      }
    }
    for (Vertex v : member) gone[v] = 1;
  }
  std::vector<Vertex> roots = rg.a;
  roots.push_back(rg.b1);
  roots.push_back(rg.b2);
  for (Vertex u : roots) {
    for (Vertex w : roots) {
      const bool b_pair = (u == rg.b1 && w == rg.b2) || (u == rg.b2 && w == rg.b1);
      if (u != w && !b_pair) adj[u][w] = 1;
    }
  }
  long long twice = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = 0; w < n; ++w) twice += !gone[u] && !gone[w] && adj[u][w];
  }
  return twice;
}

Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

TEST(VerifyLinkage, PathThroughTheRoot) {
  const RootedGraph rg{Graph(3, {{0, 1}, {1, 2}}), {1}, 0, 2};
  const auto r = verify_collection_2mlink(rg, {});
  EXPECT_EQ(r.kind, CertificateKind::linkage);
  EXPECT_EQ(r.neighborhood_cap, 2);
  EXPECT_EQ(r.lhs_edges_doubled, doubled_augmented_edges(rg, {}));
  EXPECT_EQ(r.lhs_edges_doubled, 4);
  EXPECT_EQ(r.rhs_bound_doubled, 2 * 2 * 3 - 1 - 3 - 2);
  EXPECT_TRUE(r.holds);
}

TEST(VerifyLinkage, GmkEmptyCollectionIsTight) {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 0; k <= 4; ++k) {
      const auto r = verify_collection_2mlink(gmk_graph(m, k), {});
      EXPECT_TRUE(r.holds);
      EXPECT_TRUE(r.equality()) << m << "," << k;
    }
  }
}

TEST(VerifyLinkage, RootsOnlyCompleteGraph) {
  for (int m = 0; m <= 5; ++m) {
    RootedGraph rg{complete(m + 2), {}, m, m + 1};
    for (int i = 0; i < m; ++i) rg.a.push_back(i);
    const auto r = verify_collection_2mlink(rg, {});
    EXPECT_EQ(r.lhs_edges_doubled, doubled_augmented_edges(rg, {}));
    EXPECT_EQ(r.lhs_edges_doubled, (m + 2) * (m + 1));
    EXPECT_TRUE(r.holds);
  }
}

TEST(VerifyLinkage, InvalidCollectionThrows) {
  const RootedGraph rg{Graph(4, {{0, 2}, {2, 3}, {3, 1}}), {}, 0, 1};
  EXPECT_THROW(verify_collection_2mlink(rg, Collection{{{2}, {3}}}), InvalidCollection);
  EXPECT_THROW(verify_collection_2mlink(rg, Collection{{{0, 2}}}), InvalidCollection);
}

TEST(VerifyCritical, PathWithComponentsConstruction) {
  for (int k = 1; k <= 5; ++k) {
    // b1 = 0, u_i = i, b2 = k + 1.
    RootedGraph rg{Graph(k + 2), {}, 0, k + 1};
    std::vector<Vertex> u;
    for (Vertex i = 0; i <= k; ++i) rg.graph.add_edge(i, i + 1);
    for (Vertex i = 1; i <= k; ++i) u.push_back(i);
    const Collection x = critical_base_collection(rg, u);
    const auto r = verify_collection_critical(rg, u, x);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.lhs_edges_doubled, 2 * (k + 1));
    EXPECT_EQ(r.rhs_bound_doubled, 2 * 2 * (k + 2) - 6 - 2 * k);
  }
}

TEST(VerifyCritical, WholeRemainderAsOneMember) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(rng() % 3);
    const int n = m + 3 + static_cast<int>(rng() % 4);
    RootedGraph rg{oracle::random_graph(rng, n, 0.5), {}, m, m + 1};
    for (int i = 0; i < m; ++i) rg.a.push_back(i);
    VertexSet rest;
    for (Vertex v = m + 2; v < n; ++v) rest.push_back(v);
    const auto r = verify_collection_critical(rg, {}, Collection{{rest}});
    EXPECT_EQ(r.lhs_edges_doubled, doubled_augmented_edges(rg, Collection{{rest}}));
    EXPECT_TRUE(r.holds);
  }
}

TEST(VerifyCritical, NeighbourhoodCapViolation) {
  // m = 0, b1 = 0, b2 = 1, x = 2 adjacent to b1, b2 and y = 3.
  const RootedGraph rg{Graph(4, {{0, 2}, {1, 2}, {2, 3}}), {}, 0, 1};
  const auto r = verify_collection_critical(rg, {}, Collection{{{2}}});
  EXPECT_EQ(r.neighborhood_cap, 2);
  EXPECT_LE(r.lhs_edges_doubled, r.rhs_bound_doubled);
  EXPECT_FALSE(r.holds);
}

TEST(VerifyCritical, MembersMustAvoidU) {
  const RootedGraph rg{Graph(3, {{0, 2}, {2, 1}}), {}, 0, 1};
  const Vertex u[] = {2};
  EXPECT_THROW(verify_collection_critical(rg, u, Collection{{{2}}}), InvalidCollection);
  const Vertex bad[] = {0};
  EXPECT_THROW(verify_collection_critical(rg, bad, {}), InvalidInput);
}

TEST(BaseCase, TwoDisjointEdgesWithoutRoots) {
  // b1 = 0, x = 2, b2 = 1, y = 3.
  const RootedGraph rg{Graph(4, {{0, 2}, {1, 3}}), {}, 0, 1};
  const auto x = base_case_collection(rg);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Collection{{{2}, {3}}}));
  const auto r = verify_collection_2mlink(rg, *x);
  EXPECT_EQ(r.lhs_edges_doubled, 0);
  EXPECT_TRUE(r.holds);
}

TEST(BaseCase, PathThroughTheRootGivesEmptyCollection) {
  const RootedGraph rg{Graph(3, {{0, 1}, {1, 2}}), {1}, 0, 2};
  const auto x = base_case_collection(rg);
  ASSERT_TRUE(x);
  EXPECT_TRUE(x->members.empty());
  EXPECT_TRUE(verify_collection_2mlink(rg, *x).holds);
}

TEST(BaseCase, StarAroundTheRoot) {
  // a1 = 0 centre; b1 = 1, b2 = 2, x = 3 leaves.
  const RootedGraph rg{Graph(4, {{0, 1}, {0, 2}, {0, 3}}), {0}, 1, 2};
  const auto x = base_case_collection(rg);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Collection{{{3}}}));
  EXPECT_TRUE(verify_collection_2mlink(rg, *x).holds);
}

TEST(BaseCase, NotApplicable) {
  EXPECT_FALSE(base_case_collection(RootedGraph{complete(3), {0}, 1, 2}));
  EXPECT_FALSE(base_case_collection(gmk_graph(2, 1)));
}

TEST(CriticalBase, SingleInteriorVertex) {
  const RootedGraph rg{Graph(3, {{0, 1}, {1, 2}}), {}, 0, 2};
  const Vertex u[] = {1};
  const Collection x = critical_base_collection(rg, u);
  EXPECT_TRUE(x.members.empty());
  const auto r = verify_collection_critical(rg, u, x);
  EXPECT_EQ(r.lhs_edges_doubled, 4);
  EXPECT_EQ(r.rhs_bound_doubled, 2 * 2 * 3 - 6 - 2);
  EXPECT_TRUE(r.holds);
}

TEST(CriticalBase, PendantOnTheFirstInteriorVertex) {
  // b1 = 0, u1 = 1, u2 = 2, b2 = 3, x = 4 pendant on u1.
  const RootedGraph rg{Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}), {}, 0, 3};
  const Vertex u[] = {1, 2};
  const Collection x = critical_base_collection(rg, u);
  EXPECT_EQ(x, (Collection{{{4}}}));
  EXPECT_EQ(neighborhood(rg.graph, x.members[0]), (VertexSet{1}));
  EXPECT_TRUE(verify_collection_critical(rg, u, x).holds);
}

TEST(CriticalBase, SingleAttachmentComponent) {
  // b1 = 0, u1 = 1, b2 = 2, y = 3 adjacent to u1 only.
  const RootedGraph rg{Graph(4, {{0, 1}, {1, 2}, {1, 3}}), {}, 0, 2};
  const Vertex u[] = {1};
  const Collection x = critical_base_collection(rg, u);
  EXPECT_EQ(x, (Collection{{{3}}}));
  EXPECT_EQ(neighborhood(rg.graph, x.members[0]).size(), 1u);
}

TEST(CriticalBase, PreconditionsThrow) {
  const RootedGraph cycle{Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), {}, 0, 2};
  const Vertex u[] = {1};
  EXPECT_THROW(critical_base_collection(cycle, u), InvalidInput);
  EXPECT_THROW(critical_base_collection(gmk_graph(1, 1), {}), InvalidInput);
}

TEST(SearchCollection, PathThroughTheRoot) {
  const RootedGraph rg{Graph(3, {{0, 1}, {1, 2}}), {1}, 0, 2};
  const auto r = search_collection(rg, CertificateKind::linkage, {});
  ASSERT_EQ(r.status, CollectionSearchStatus::found);
  EXPECT_TRUE(r.report->collection.members.empty());
}

TEST(SearchCollection, GmkReturnsEmptyCollection) {
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k <= 3; ++k) {
      const auto r = search_collection(gmk_graph(m, k), CertificateKind::linkage, {});
      ASSERT_EQ(r.status, CollectionSearchStatus::found);
      EXPECT_TRUE(r.report->collection.members.empty());
      EXPECT_TRUE(r.report->equality());
    }
  }
}

TEST(SearchCollection, NeedsANonEmptyMember) {
  // m = 0, b1 = 0, b2 = 1, K4 on {2,3,4,5} attached to b1 through 2 only.
  // ∅ fails with 2e = 14 > 10; contracting part of the K4 certifies.
  Graph g(6, {{0, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  const RootedGraph rg{g, {}, 0, 1};
  EXPECT_FALSE(verify_collection_2mlink(rg, {}).holds);
  const auto r = search_collection(rg, CertificateKind::linkage, {});
  ASSERT_EQ(r.status, CollectionSearchStatus::found);
  EXPECT_FALSE(r.report->collection.members.empty());
  EXPECT_TRUE(verify_collection_2mlink(rg, r.report->collection).holds);
}

TEST(SearchCollection, BudgetAndArgumentChecks) {
  const RootedGraph rg = gmk_graph(2, 3);
  const Vertex u[] = {4};
  EXPECT_THROW(search_collection(rg, CertificateKind::linkage, u), InvalidInput);
  Graph big(12);
  for (Vertex v = 2; v + 1 < 12; ++v) big.add_edge(v, v + 1);
  const auto r = search_collection(RootedGraph{big, {}, 0, 1}, CertificateKind::linkage, {}, SearchBudget{3, 1000});
  EXPECT_EQ(r.status, CollectionSearchStatus::budget_exhausted);
}

TEST(TheoremCheck, CompleteGraphIsFeasible) {
  const Verdict v = theorem_check(RootedGraph{complete(5), {0}, 1, 2});
  EXPECT_EQ(v.outcome, VerdictOutcome::feasible);
  ASSERT_TRUE(v.pair);
  EXPECT_FALSE(v.report);
}

TEST(TheoremCheck, GmkTwoTwoIsCertifiedWithEquality) {
  const Verdict v = theorem_check(gmk_graph(2, 2));
  ASSERT_EQ(v.outcome, VerdictOutcome::certified);
  EXPECT_TRUE(v.report->collection.members.empty());
  EXPECT_TRUE(v.report->equality());
  EXPECT_EQ(v.report->lhs_edges_doubled, doubled_augmented_edges(gmk_graph(2, 2), {}));
}

TEST(TheoremCheck, NoCounterexamplesOnFourVertices) {
  for (const Graph& g : nonisomorphic_graphs(4)) {
    for (Vertex a = 0; a < 4; ++a) {
      for (Vertex b1 = 0; b1 < 4; ++b1) {
        for (Vertex b2 = 0; b2 < 4; ++b2) {
          if (a == b1 || a == b2 || b1 == b2) continue;
          const Verdict v = theorem_check(RootedGraph{g, {a}, b1, b2});
          EXPECT_NE(v.outcome, VerdictOutcome::counterexample_candidate);
          EXPECT_NE(v.outcome, VerdictOutcome::inconclusive);
        }
      }
    }
  }
}

TEST(TheoremCheck, RandomSevenVertexInstances) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(rng() % 3);
    RootedGraph rg{oracle::random_graph(rng, 7, 0.25 + 0.1 * (trial % 4)), {}, m, m + 1};
    for (int i = 0; i < m; ++i) rg.a.push_back(i);
    const Verdict v = theorem_check(rg);
    ASSERT_NE(v.outcome, VerdictOutcome::counterexample_candidate) << serialize_graph6(rg.graph);
    EXPECT_EQ(v.outcome == VerdictOutcome::feasible, oracle::naive_feasible(rg));
    if (v.report) {
      EXPECT_TRUE(verify_collection_2mlink(rg, v.report->collection).holds);
      EXPECT_EQ(v.report->lhs_edges_doubled, doubled_augmented_edges(rg, v.report->collection));
    }
  }
}

TEST(Gmk, SmallestGraphs) {
  const RootedGraph g00 = gmk_graph(0, 0);
  EXPECT_EQ(g00.graph, Graph(2, {{0, 1}}));
  EXPECT_TRUE(g00.a.empty());
  const RootedGraph g11 = gmk_graph(1, 1);
  EXPECT_EQ(g11.graph.vertex_count(), 4);
  EXPECT_EQ(g11.graph.edge_count(), 5u);
  EXPECT_THROW(gmk_graph(-1, 0), InvalidInput);
}

TEST(Gmk, ThreeTwoStructure) {
  const RootedGraph rg = gmk_graph(3, 2);
  // Path 3 edges, a_i to 4 path vertices each, one edge a_1 a_2.
  EXPECT_EQ(rg.graph.edge_count(), 3u + 12u + 1u);
  EXPECT_TRUE(is_induced_path_in(rg.graph, Path{{3, 5, 6, 4}}));
  EXPECT_TRUE(rg.graph.has_edge(0, 1));
  EXPECT_FALSE(rg.graph.has_edge(0, 2));
  EXPECT_FALSE(rg.graph.has_edge(1, 2));
  // 𝒢 adds a_3 a_1, a_3 a_2.
  EXPECT_EQ(augment_rooted(rg, {}).edge_count(), 3u + 12u + 1u + 2u);
}

TEST(GmkAudit, SpotChecks) {
  // With one root the bound is met but the graph is feasible.
  const GmkAudit a10 = gmk_audit(1, 0);
  EXPECT_EQ(a10.edges_doubled, 6);
  EXPECT_TRUE(a10.empty_certificate.equality());
  EXPECT_TRUE(a10.only_empty_collection);
  EXPECT_FALSE(a10.infeasible);
  EXPECT_FALSE(a10.passed());
  EXPECT_EQ(a10.mismatch(), "G_{1,0} is feasible; ");
  const GmkAudit a21 = gmk_audit(2, 1);
  EXPECT_TRUE(a21.passed()) << a21.mismatch();
  EXPECT_EQ(a21.edges_doubled, 2 * 9);
  const GmkAudit a43 = gmk_audit(4, 3);
  EXPECT_TRUE(a43.passed()) << a43.mismatch();
  EXPECT_TRUE(a43.empty_certificate.equality());
  EXPECT_TRUE(a43.mismatch().empty());
  EXPECT_THROW(gmk_audit(0, 1), InvalidInput);
}

TEST(Reports, RecomputationIsPure) {
  const RootedGraph rg = gmk_graph(2, 3);
  const auto first = verify_collection_2mlink(rg, {});
  const auto second = verify_collection_2mlink(rg, {});
  EXPECT_EQ(first.lhs_edges_doubled, second.lhs_edges_doubled);
  EXPECT_EQ(first.rhs_bound_doubled, second.rhs_bound_doubled);
  EXPECT_EQ(first.holds, second.holds);
}

}  // namespace
}  // namespace linkage
