#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "brute.hpp"
#include "dyntri/stream.hpp"

using namespace dyntri;

namespace {

StreamConfig cfg(std::uint32_t n, std::uint64_t m_max = 1000) { return {n, m_max}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST(NormalizeEvent, SwapsEndpoints) {
  EXPECT_EQ(normalize_event(3, 1, Sign::Insert, 5), (EdgeEvent{1, 3, Sign::Insert}));
}

TEST(NormalizeEvent, IdentityWhenOrdered) {
  EXPECT_EQ(normalize_event(1, 2, Sign::Delete, 5), (EdgeEvent{1, 2, Sign::Delete}));
}

TEST(NormalizeEvent, RejectsLoops) {
  EXPECT_EQ(code_of([] { normalize_event(2, 2, Sign::Insert, 5); }), ErrorCode::LoopEdge);
}

TEST(NormalizeEvent, RejectsOutOfUniverse) {
  EXPECT_EQ(code_of([] { normalize_event(0, 2, Sign::Insert, 5); }), ErrorCode::OutOfUniverse);
  EXPECT_EQ(code_of([] { normalize_event(1, 6, Sign::Insert, 5); }), ErrorCode::OutOfUniverse);
  EXPECT_EQ(code_of([] { normalize_event(-3, 2, Sign::Insert, 5); }), ErrorCode::OutOfUniverse);
}

TEST(StreamConfigTest, Validation) {
  EXPECT_EQ(code_of([] { StreamConfig{1, 5}.validate(); }), ErrorCode::InvalidRange);
  EXPECT_EQ(code_of([] { StreamConfig{5, 0}.validate(); }), ErrorCode::InvalidRange);
  EXPECT_NO_THROW((StreamConfig{2, 1}.validate()));
}

TEST(ApplyEvent, InsertThenDelete) {
  AdjacencyGraph g(cfg(4));
  g.apply({1, 2, Sign::Insert});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(2, 1));
  g.apply({1, 2, Sign::Delete});
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_FALSE(g.has_edge(1, 2));
}

TEST(ApplyEvent, TurnstileViolations) {
  AdjacencyGraph g(cfg(4, 1));
  EXPECT_EQ(code_of([&] { g.apply({1, 2, Sign::Delete}); }), ErrorCode::DeleteAbsent);
  g.apply({1, 2, Sign::Insert});
  EXPECT_EQ(code_of([&] { g.apply({1, 2, Sign::Insert}); }), ErrorCode::DuplicateInsert);
  EXPECT_EQ(code_of([&] { g.apply({1, 3, Sign::Insert}); }), ErrorCode::OverCapacity);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Materialize, Triangle) {
  const auto g = materialize(brute::inserts({{1, 2}, {2, 3}, {1, 3}}), cfg(3));
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Materialize, CompleteFourAndDeletion) {
  auto events = brute::inserts({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  const auto k4 = materialize(events, cfg(4));
  for (VertexId v = 1; v <= 4; ++v) EXPECT_EQ(k4.degree(v), 3u);
  events.push_back({1, 2, Sign::Delete});
  const auto g = materialize(events, cfg(4));
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.degree(2), 2u);
}

TEST(Materialize, ErrorCarriesEventIndex) {
  std::vector<EdgeEvent> events{{1, 2, Sign::Insert}, {2, 3, Sign::Insert}, {1, 3, Sign::Delete}};
  try {
    materialize(events, cfg(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DeleteAbsent);
    EXPECT_EQ(e.position(), std::optional<std::size_t>(2));
  }
}

TEST(Materialize, MatchesReplayAndIsSymmetric) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto events = brute::random_turnstile(25, 400, 0.4, rng);
    const auto g = materialize(events, cfg(25, 10000));
    const auto expected = brute::final_edges(events);
    const auto edges = g.edges();
    EXPECT_EQ(brute::EdgeSet(edges.begin(), edges.end()), expected);

    std::int64_t net = 0;
    for (const auto& e : events) net += weight(e.sign);
    EXPECT_EQ(static_cast<std::int64_t>(g.edge_count()), net);

    std::uint64_t deg_sum = 0;
    for (VertexId v = 1; v <= 25; ++v) {
      deg_sum += g.degree(v);
      for (VertexId w : g.neighbors(v)) EXPECT_TRUE(g.neighbors(w).contains(v));
    }
    EXPECT_EQ(deg_sum, 2 * g.edge_count());
  }
}

TEST(Materialize, PermutationInvariantOnInsertOnlyStreams) {
  std::mt19937_64 rng(5);
  auto events = brute::inserts(brute::random_graph(20, 0.3, rng));
  const auto a = materialize(events, cfg(20));
  std::shuffle(events.begin(), events.end(), rng);
  const auto b = materialize(events, cfg(20));
  EXPECT_TRUE(a == b);
}

TEST(PeakLiveEdges, TracksMaximum) {
  std::vector<EdgeEvent> events{{1, 2, Sign::Insert}, {2, 3, Sign::Insert},
                                {1, 2, Sign::Delete}, {3, 4, Sign::Insert}};
  EXPECT_EQ(peak_live_edges(events, 4), 2u);
}

TEST(Parser, ReadsFormatSkippingCommentsAndBlanks) {
  std::istringstream in("# header\n+ 3 1\n\n  - 1 3\n+ 2 4\n");
  const auto s = parse_stream(in);
  ASSERT_EQ(s.events.size(), 3u);
  EXPECT_EQ(s.n, 4u);
  EXPECT_EQ(s.events[0], (EdgeEvent{1, 3, Sign::Insert}));
  EXPECT_EQ(s.events[1], (EdgeEvent{1, 3, Sign::Delete}));
  EXPECT_EQ(s.lines, (std::vector<std::size_t>{2, 4, 5}));
}

TEST(Parser, ReportsLineNumbers) {
  for (const char* bad : {"+ 1 2\n* 1 3\n", "+ 1 2\n+ 1\n", "+ 1 2\n+ 1 x\n", "+ 1 2\n+ 1 2 3\n"}) {
    std::istringstream in(bad);
    try {
      parse_stream(in);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
      EXPECT_EQ(e.position(), std::optional<std::size_t>(2)) << bad;
    }
  }
  std::istringstream loop("+ 1 2\n+ 3 3\n");
  try {
    parse_stream(loop);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LoopEdge);
    EXPECT_EQ(e.position(), std::optional<std::size_t>(2));
  }
}

TEST(Parser, ExplicitUniverseRejectsLargeIds) {
  std::istringstream in("+ 1 9\n");
  EXPECT_EQ(code_of([&] { parse_stream(in, 5); }), ErrorCode::OutOfUniverse);
}

TEST(Parser, RoundTripsWriter) {
  std::mt19937_64 rng(3);
  const auto events = brute::random_turnstile(30, 200, 0.3, rng);
  std::ostringstream out;
  write_stream(out, events);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_stream(in, 30).events, events);
}
