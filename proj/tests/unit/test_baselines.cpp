#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "dyntri/doulion.hpp"

using namespace dyntri;

namespace {

std::vector<EdgeEvent> complete(std::uint32_t k) {
  brute::EdgeSet s;
  for (std::uint32_t u = 1; u <= k; ++u)
    for (std::uint32_t v = u + 1; v <= k; ++v) s.insert({u, v});
  return brute::inserts(s);
}

}  // namespace

TEST(Doulion, FullRetentionIsExact) {
  EXPECT_EQ(doulion_estimate(complete(10), 1.0, 3, 10), 120.0);
  DoulionCounter c(1.0, 3, 10);
  for (const auto& e : complete(10)) c.update(e);
  EXPECT_EQ(c.retained().edge_count(), 45u);
}

TEST(Doulion, TriangleFreeIsAlwaysZero) {
  std::vector<EdgeEvent> ev;
  for (std::uint32_t u = 1; u <= 6; ++u)
    for (std::uint32_t v = 7; v <= 12; ++v) ev.push_back({u, v, Sign::Insert});
  for (double p : {0.1, 0.5, 1.0}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_EQ(doulion_estimate(ev, p, seed, 12), 0.0);
  }
}

TEST(Doulion, InsertDeleteLeavesRetainedGraphUnchanged) {
  DoulionCounter c(0.5, 7, 20);
  for (const auto& e : complete(8)) c.update(e);
  const auto before = c.retained().edges();
  for (std::uint32_t v = 9; v <= 20; ++v) {
    c.update({1, v, Sign::Insert});
    c.update({1, v, Sign::Delete});
  }
  EXPECT_EQ(c.retained().edges(), before);
}

TEST(Doulion, RetainedCountConcentrates) {
  std::vector<EdgeEvent> ev;
  for (std::uint32_t u = 1; u <= 100; ++u)
    for (std::uint32_t v = 101; v <= 200; ++v) ev.push_back({u, v, Sign::Insert});
  ASSERT_EQ(ev.size(), 10000u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DoulionCounter c(0.5, seed, 200);
    for (const auto& e : ev) c.update(e);
    EXPECT_NEAR(static_cast<double>(c.retained().edge_count()), 5000.0, 250.0);
  }
}

TEST(Doulion, MeanNearTruth) {
  const auto ev = complete(10);
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) sum += doulion_estimate(ev, 0.5, seed, 10);
  EXPECT_NEAR(sum / 1000.0, 120.0, 6.0);
}

TEST(Doulion, InsertionOrderInvariant) {
  auto ev = complete(9);
  const double a = doulion_estimate(ev, 0.4, 5, 9);
  std::mt19937_64 rng(1);
  std::shuffle(ev.begin(), ev.end(), rng);
  EXPECT_EQ(doulion_estimate(ev, 0.4, 5, 9), a);
}

TEST(Doulion, RejectsBadProbability) {
  EXPECT_THROW(DoulionCounter(0.0, 1, 5), Error);
  EXPECT_THROW(DoulionCounter(1.5, 1, 5), Error);
}
