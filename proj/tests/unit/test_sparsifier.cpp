#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <map>
#include <random>

#include "brute.hpp"
#include "dyntri/sparsifier.hpp"

using namespace dyntri;

namespace {

// floor(log2 x) by repeated halving.
int floor_log2(std::uint64_t x) {
  int k = -1;
  while (x) {
    x >>= 1;
    ++k;
  }
  return k;
}

SparsifiedGraph build(std::uint32_t n, std::initializer_list<brute::Edge> edges) {
  SparsifiedGraph g(n);
  for (auto [u, v] : edges) g.insert(u, v);
  return g;
}

// Rebuilds bucket membership and totals from the edge set alone and
// compares them with the incremental structure.
void expect_matches_scratch(const SparsifiedGraph& g, std::uint32_t n, const brute::EdgeSet& edges) {
  std::vector<std::uint64_t> deg(n + 1, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  std::vector<std::uint64_t> bucket_mass(g.bucket_count(), 0);
  std::uint64_t total = 0;
  std::size_t present = 0;
  for (VertexId v = 1; v <= n; ++v) {
    ASSERT_EQ(g.degree(v), deg[v]);
    if (deg[v] == 0) {
      EXPECT_FALSE(g.bucket_of(v).has_value());
      continue;
    }
    ++present;
    if (deg[v] == 1) {
      EXPECT_EQ(g.bucket_of(v), SparsifiedGraph::kDegreeOneShelf);
      continue;
    }
    const std::uint64_t c = deg[v] * (deg[v] - 1) / 2;
    const int i = floor_log2(c);
    EXPECT_EQ(g.bucket_of(v), i);
    bucket_mass[static_cast<std::size_t>(i)] += c;
    total += c;
  }
  EXPECT_EQ(g.vertex_count(), present);
  for (std::size_t i = 0; i < g.bucket_count(); ++i) EXPECT_EQ(g.bucket_p2(i), bucket_mass[i]);
  EXPECT_EQ(g.p2_total(), total);
  EXPECT_EQ(g.edge_count(), edges.size());
  for (auto [u, v] : edges) EXPECT_TRUE(g.has_edge(u, v) && g.has_edge(v, u));
  EXPECT_NO_THROW(g.audit());
}

}  // namespace

TEST(Coloring, SingleColor) {
  ColoringFunction f(123, 1);
  for (VertexId v = 1; v <= 100; ++v) EXPECT_EQ(f.color(v), 1u);
}

TEST(Coloring, Deterministic) {
  ColoringFunction f(5, 7), g(5, 7);
  for (VertexId v = 1; v <= 1000; ++v) {
    EXPECT_EQ(f.color(v), g.color(v));
    EXPECT_GE(f.color(v), 1u);
    EXPECT_LE(f.color(v), 7u);
  }
}

TEST(Coloring, UniformOverSixteenColors) {
  ColoringFunction f(1, 16);
  std::vector<double> counts(17, 0.0);
  const std::uint32_t n = 100000;
  for (VertexId v = 1; v <= n; ++v) counts[f.color(v)] += 1.0;
  const double expected = n / 16.0;
  double chi2 = 0.0;
  for (std::uint32_t c = 1; c <= 16; ++c) {
    EXPECT_NEAR(counts[c] / n, 1.0 / 16.0, 0.03 / 16.0) << c;
    chi2 += (counts[c] - expected) * (counts[c] - expected) / expected;
  }
  const double critical = boost::math::quantile(
      boost::math::complement(boost::math::chi_squared(15.0), 0.01));
  EXPECT_LT(chi2, critical);
}

TEST(SparsifiedGraphTest, BucketArithmetic) {
  EXPECT_EQ(SparsifiedGraph::bucket_for_degree(1), SparsifiedGraph::kDegreeOneShelf);
  EXPECT_EQ(SparsifiedGraph::bucket_for_degree(2), 0);  // C = 1
  EXPECT_EQ(SparsifiedGraph::bucket_for_degree(3), 1);  // C = 3
  EXPECT_EQ(SparsifiedGraph::bucket_for_degree(4), 2);  // C = 6
  EXPECT_EQ(SparsifiedGraph::bucket_for_degree(5), 3);  // C = 10
  for (std::uint64_t d = 2; d < 3000; ++d) {
    EXPECT_EQ(SparsifiedGraph::bucket_for_degree(d), floor_log2(d * (d - 1) / 2));
  }
  for (std::uint32_t n : {2u, 3u, 4u, 5u, 7u, 8u, 100u, 1000u, 65535u, 65536u, 1000000u}) {
    // floor(2 log2 n) + 1 computed as floor(log2 n^2) + 1.
    EXPECT_EQ(SparsifiedGraph::buckets_for_universe(n),
              static_cast<std::size_t>(floor_log2(std::uint64_t{n} * n) + 1))
        << n;
  }
}

TEST(SparsifiedGraphTest, MonochromaticTriangle) {
  const auto g = build(5, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.p2_total(), 3u);
  for (VertexId v : {1u, 2u, 3u}) EXPECT_EQ(g.bucket_of(v), 0);
  EXPECT_TRUE(g.has_edge(1, 3));
}

TEST(SparsifiedGraphTest, DegreeFourMigratesToBucketTwo) {
  auto g = build(6, {{1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(g.bucket_of(1), 1);
  g.insert(1, 5);
  EXPECT_EQ(g.bucket_of(1), 2);
  EXPECT_EQ(g.bucket_p2(2), 6u);
  g.erase(1, 5);
  g.erase(1, 4);
  EXPECT_EQ(g.bucket_of(1), 0);
  g.erase(1, 3);
  EXPECT_EQ(g.bucket_of(1), SparsifiedGraph::kDegreeOneShelf);
  g.erase(1, 2);
  EXPECT_FALSE(g.bucket_of(1).has_value());
  EXPECT_EQ(g.vertex_count(), 0u);
}

TEST(SparsifiedGraphTest, HasEdgeQueries) {
  auto g = build(4, {{1, 2}, {2, 3}});
  EXPECT_FALSE(g.has_edge(1, 3));
  g.insert(1, 3);
  EXPECT_TRUE(g.has_edge(3, 1));
  g.erase(1, 3);
  EXPECT_FALSE(g.has_edge(1, 3));
}

TEST(SparsifiedGraphTest, InconsistentUpdates) {
  SparsifiedGraph g(4);
  try {
    g.erase(1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentDelete);
  }
  g.insert(1, 2);
  try {
    g.insert(2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentInsert);
  }
  EXPECT_THROW(g.insert(1, 9), Error);
  EXPECT_NO_THROW(g.audit());
}

TEST(SparsifierTest, BichromaticEdgeIsIgnored) {
  // Pick a seed whose coloring splits vertices 1 and 2.
  std::uint64_t seed = 0;
  while (ColoringFunction(seed, 4).monochromatic(1, 2)) ++seed;
  Sparsifier s(ColoringFunction(seed, 4), 10);
  s.update({1, 2, Sign::Insert});
  EXPECT_EQ(s.graph().edge_count(), 0u);
  EXPECT_EQ(s.graph().vertex_count(), 0u);
  s.update({1, 2, Sign::Delete});
  EXPECT_EQ(s.graph().edge_count(), 0u);
}

TEST(SparsifiedGraphTest, SampleEmptyAndSinglePath) {
  std::mt19937_64 rng(1);
  SparsifiedGraph empty(5);
  EXPECT_FALSE(empty.sample(rng).has_value());
  const auto lone = build(5, {{4, 5}});
  EXPECT_FALSE(lone.sample(rng).has_value());
  const auto g = build(5, {{1, 2}, {2, 3}});
  for (int i = 0; i < 100; ++i) {
    const auto s = g.sample(rng);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->path, (TwoPath{1, 2, 3}));
  }
}

TEST(SparsifiedGraphTest, SamplerTotalVariationSmall) {
  // Star K_{1,3} plus a tail: 2-paths over several buckets, 12 in total.
  const brute::EdgeSet edges{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {6, 7}, {3, 8}};
  SparsifiedGraph g(8);
  for (auto [u, v] : edges) g.insert(u, v);
  const auto paths = brute::two_paths(8, edges);
  ASSERT_LE(paths.size(), 12u);
  std::map<std::array<std::uint32_t, 3>, double> freq;
  std::mt19937_64 rng(77);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const auto s = g.sample(rng);
    ASSERT_TRUE(s);
    freq[{s->path.u, s->path.center, s->path.w}] += 1.0;
  }
  double tv = 0.0;
  for (const auto& p : paths) tv += std::abs(freq[p] / draws - 1.0 / paths.size());
  for (const auto& [key, f] : freq) {
    EXPECT_TRUE(std::find(paths.begin(), paths.end(), key) != paths.end());
  }
  EXPECT_LT(tv / 2.0, 0.02);
}

TEST(SparsifiedGraphTest, IncrementalStateMatchesScratch) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t n = 60;
    const auto events = brute::random_turnstile(n, 3000, 0.45, rng);
    SparsifiedGraph g(n);
    brute::EdgeSet live;
    for (std::size_t i = 0; i < events.size(); ++i) {
      g.apply(events[i]);
      const auto e = brute::ordered(events[i].u, events[i].v);
      events[i].sign == Sign::Insert ? (void)live.insert(e) : (void)live.erase(e);
      if (i % 500 == 0) expect_matches_scratch(g, n, live);
    }
    expect_matches_scratch(g, n, live);
    EXPECT_EQ(g.p2_total(), brute::two_paths(n, live).size());
  }
}

TEST(SparsifiedGraphTest, CanonicalSamplingDependsOnFinalEdgesOnly) {
  std::mt19937_64 gen(9);
  const auto churn = brute::random_turnstile(30, 800, 0.4, gen);
  const auto final_edges = brute::final_edges(churn);
  SparsifiedGraph a(30), b(30);
  for (const auto& e : churn) a.apply(e);
  std::vector<brute::Edge> order(final_edges.rbegin(), final_edges.rend());
  for (auto [u, v] : order) b.insert(u, v);
  a.canonicalize();
  b.canonicalize();
  std::mt19937_64 ra(4), rb(4);
  for (int i = 0; i < 200; ++i) {
    const auto sa = a.sample(ra), sb = b.sample(rb);
    ASSERT_EQ(sa.has_value(), sb.has_value());
    if (!sa) break;
    EXPECT_EQ(sa->path, sb->path);
    EXPECT_EQ(sa->attempts, sb->attempts);
  }
}

TEST(SparsifiedGraphTest, AcceptanceRateAtLeastHalf) {
  std::mt19937_64 gen(12);
  const auto edges = brute::random_graph(40, 0.2, gen);
  SparsifiedGraph g(40);
  for (auto [u, v] : edges) g.insert(u, v);
  std::mt19937_64 rng(3);
  std::uint64_t attempts = 0;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) attempts += g.sample(rng)->attempts;
  EXPECT_LE(static_cast<double>(attempts) / draws, 2.0);
}
