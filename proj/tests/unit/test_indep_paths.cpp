#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "dyntri/indep_paths.hpp"

using namespace dyntri;

namespace {

AdjacencyGraph graph_of(std::uint32_t n, const brute::EdgeSet& edges) {
  return materialize(brute::inserts(edges), StreamConfig{n, 100000});
}

brute::EdgeSet complete(std::uint32_t k) {
  brute::EdgeSet s;
  for (std::uint32_t u = 1; u <= k; ++u)
    for (std::uint32_t v = u + 1; v <= k; ++v) s.insert({u, v});
  return s;
}

brute::EdgeSet star(std::uint32_t leaves) {
  brute::EdgeSet s;
  for (std::uint32_t v = 2; v <= leaves + 1; ++v) s.insert({1, v});
  return s;
}

brute::EdgeSet path(std::uint32_t k) {
  brute::EdgeSet s;
  for (std::uint32_t v = 1; v < k; ++v) s.insert({v, v + 1});
  return s;
}

brute::EdgeSet random_tree(std::uint32_t n, std::mt19937_64& rng) {
  brute::EdgeSet s;
  for (std::uint32_t v = 2; v <= n; ++v) {
    s.insert({static_cast<std::uint32_t>(1 + rng() % (v - 1)), v});
  }
  return s;
}

std::uint64_t brute_max(std::uint32_t n, const brute::EdgeSet& edges) {
  return brute::max_independent(brute::two_paths(n, edges));
}

}  // namespace

TEST(Conflicts, SharingTwoVerticesConflicts) {
  EXPECT_TRUE(conflicts(TwoPath{1, 2, 3}, TwoPath{2, 3, 4}));
  EXPECT_TRUE(conflicts(TwoPath{1, 2, 3}, TwoPath{1, 3, 2}));
  EXPECT_FALSE(conflicts(TwoPath{1, 2, 3}, TwoPath{3, 4, 5}));
  EXPECT_FALSE(conflicts(TwoPath{2, 1, 3}, TwoPath{4, 1, 5}));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    auto pick = [&] {
      const auto a = static_cast<VertexId>(1 + rng() % 6);
      auto b = static_cast<VertexId>(1 + rng() % 6);
      auto c = static_cast<VertexId>(1 + rng() % 6);
      while (b == a) b = static_cast<VertexId>(1 + rng() % 6);
      while (c == a || c == b) c = static_cast<VertexId>(1 + rng() % 6);
      return TwoPath::make(a, b, c);
    };
    const TwoPath x = pick(), y = pick();
    EXPECT_EQ(conflicts(x, y), conflicts(y, x));
    EXPECT_EQ(conflicts(x, y), brute::share_two({x.u, x.center, x.w}, {y.u, y.center, y.w}));
  }
}

TEST(Greedy, WorkedExamples) {
  EXPECT_EQ(greedy_independent_count(graph_of(3, complete(3)), 5), 1u);
  EXPECT_EQ(greedy_independent_count(graph_of(5, path(5)), 5), 2u);
  EXPECT_EQ(greedy_independent_count(graph_of(7, star(6)), 2), 2u);
  const auto set = greedy_independent_set(graph_of(5, path(5)).sorted_adjacency());
  EXPECT_EQ(set, (std::vector<TwoPath>{{1, 2, 3}, {3, 4, 5}}));
}

TEST(Greedy, TargetMustBePositive) {
  EXPECT_THROW(greedy_independent_count(graph_of(3, complete(3)), 0), Error);
}

TEST(Greedy, LexicographicOrderMatchesLiteralScan) {
  // Literal definition: scan enumerate_two_paths in order, accept when
  // independent of everything accepted.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 4 + static_cast<std::uint32_t>(rng() % 12);
    const auto edges = brute::random_graph(n, 0.35, rng);
    const auto adj = graph_of(n, edges).sorted_adjacency();
    std::vector<TwoPath> literal;
    for (const auto& p : enumerate_two_paths(adj)) {
      bool ok = true;
      for (const auto& q : literal) ok = ok && !conflicts(p, q);
      if (ok) literal.push_back(p);
    }
    const auto greedy = greedy_independent_set(adj);
    EXPECT_EQ(greedy, literal);
    EXPECT_TRUE(is_independent_set(greedy));
    if (!literal.empty()) {
      EXPECT_EQ(greedy_independent_count(adj, 3), std::min<std::uint64_t>(3, literal.size()));
    }
  }
}

TEST(Exact, WorkedExamples) {
  EXPECT_EQ(exact_max_independent(graph_of(3, complete(3))), 1u);
  EXPECT_EQ(exact_max_independent(graph_of(5, star(4))), 2u);
  EXPECT_EQ(brute_max(5, star(4)), 2u);
}

TEST(Exact, CompleteFourHasOnlyOne) {
  // Any two vertex triples drawn from four vertices share two of them.
  EXPECT_EQ(brute_max(4, complete(4)), 1u);
  EXPECT_EQ(exact_max_independent(graph_of(4, complete(4))), 1u);
}

TEST(Exact, BudgetExceeded) {
  try {
    exact_max_independent(graph_of(5, complete(5)));  // 30 two-paths
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Exact, MatchesSubsetEnumerationAndBoundsGreedy) {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 150) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 8);
    const auto edges = brute::random_graph(n, 0.3, rng);
    const auto paths = brute::two_paths(n, edges);
    if (paths.size() > 16) continue;
    const auto g = graph_of(n, edges);
    const auto exact = exact_max_independent(g);
    EXPECT_EQ(exact, brute::max_independent(paths));
    if (!paths.empty()) EXPECT_LE(greedy_independent_count(g, 1000), exact);
    ++checked;
  }
}

TEST(SpanningTree, WitnessIsIndependentAndLarge) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 38);
    auto edges = random_tree(n, rng);
    for (auto e : brute::random_graph(n, 0.05, rng)) edges.insert(e);
    const auto g = graph_of(n, edges);
    const auto w = spanning_tree_independent_set(g);
    EXPECT_TRUE(is_independent_set(w));
    for (const auto& p : w) {
      EXPECT_TRUE(g.has_edge(p.u, p.center) && g.has_edge(p.center, p.w));
    }
    EXPECT_GE(w.size(), (n + 1) / 2 - 1);
  }
}

TEST(GraphPredicates, ConnectedBipartiteIsolated) {
  EXPECT_TRUE(is_connected(graph_of(5, path(5))));
  EXPECT_FALSE(is_connected(graph_of(5, {{1, 2}, {3, 4}, {4, 5}})));
  EXPECT_TRUE(is_bipartite(graph_of(6, path(6))));
  EXPECT_FALSE(is_bipartite(graph_of(3, complete(3))));
  EXPECT_TRUE(has_isolated_edge(graph_of(5, {{1, 2}, {3, 4}, {4, 5}})));
  EXPECT_FALSE(has_isolated_edge(graph_of(5, path(5))));
}

TEST(LowerBounds, TreeOnTenVertices) {
  std::mt19937_64 rng(10);
  const auto r = verify_lower_bounds(graph_of(10, random_tree(10, rng)));
  EXPECT_EQ(r.bound_connected, 4u);
  EXPECT_GE(r.witness, 4u);
  EXPECT_TRUE(r.connected_satisfied);
  EXPECT_FALSE(r.violation());
}

TEST(LowerBounds, CompleteBipartiteThreeThree) {
  brute::EdgeSet k33;
  for (std::uint32_t u = 1; u <= 3; ++u)
    for (std::uint32_t v = 4; v <= 6; ++v) k33.insert({u, v});
  const auto r = verify_lower_bounds(graph_of(6, k33));
  EXPECT_TRUE(r.bipartite);
  EXPECT_EQ(r.bound_bipartite, 1u);
  EXPECT_EQ(r.bipartite_satisfied, std::optional<bool>(true));
  EXPECT_FALSE(r.violation());
}

TEST(LowerBounds, ThirtySixEdges) {
  // K_9 has 36 edges.
  const auto r = verify_lower_bounds(graph_of(9, complete(9)));
  EXPECT_EQ(r.edges, 36u);
  EXPECT_EQ(r.bound_general, 2u);
  EXPECT_GE(r.witness, 2u);
  EXPECT_TRUE(r.general_satisfied);
  EXPECT_FALSE(r.bipartite_satisfied.has_value());
}

TEST(LowerBounds, Preconditions) {
  try {
    verify_lower_bounds(graph_of(5, {{1, 2}, {3, 4}, {4, 5}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::NotConnected || e.code() == ErrorCode::HasIsolatedEdges);
  }
  try {
    verify_lower_bounds(graph_of(2, {{1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HasIsolatedEdges);
  }
}
