#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dyntri/error.hpp"

namespace dyntri {

using VertexId = std::uint32_t;

/// Largest admissible universe size. Vertex ids must stay below the
/// Mersenne prime used by the sign hashes.
inline constexpr std::uint32_t kMaxUniverse = (1U << 31) - 2;

enum class Sign : std::int8_t { Insert = 1, Delete = -1 };

constexpr int weight(Sign s) noexcept { return static_cast<int>(s); }

/// A normalized edge update: u < v.
struct EdgeEvent {
  VertexId u = 0;
  VertexId v = 0;
  Sign sign = Sign::Insert;

  bool operator==(const EdgeEvent&) const = default;
};

struct StreamConfig {
  std::uint32_t n = 2;       // vertex universe is [1, n]
  std::uint64_t m_max = 1;   // maximum live edge count

  void validate() const;
};

constexpr std::uint64_t edge_key(VertexId u, VertexId v) noexcept {
  return u < v ? (std::uint64_t{u} << 32) | v : (std::uint64_t{v} << 32) | u;
}

/// Canonicalizes a raw update so that u < v.
EdgeEvent normalize_event(std::int64_t u_raw, std::int64_t v_raw, Sign sign,
                          std::uint32_t n);

/// A 2-path (u, center, w) with unordered endpoints stored as u < w.
struct TwoPath {
  VertexId u = 0;
  VertexId center = 0;
  VertexId w = 0;

  static TwoPath make(VertexId a, VertexId center, VertexId b) noexcept {
    return a < b ? TwoPath{a, center, b} : TwoPath{b, center, a};
  }
  bool operator==(const TwoPath&) const = default;
  auto operator<=>(const TwoPath&) const = default;
};

/// Vertices of degree >= 1 in ascending order, each with its sorted
/// neighbor list. Common input of the independence routines.
struct SortedAdjacency {
  std::vector<VertexId> vertices;
  std::vector<std::vector<VertexId>> neighbors;
};

/// Exact materialized simple graph over [1, n], used by every oracle.
class AdjacencyGraph {
 public:
  explicit AdjacencyGraph(StreamConfig cfg);

  /// Applies one normalized event under strict turnstile rules.
  void apply(const EdgeEvent& e);

  bool has_edge(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
  const std::unordered_set<VertexId>& neighbors(VertexId v) const {
    return adj_.at(v);
  }
  std::vector<VertexId> sorted_neighbors(VertexId v) const;

  std::uint64_t edge_count() const noexcept { return m_live_; }
  std::uint32_t universe() const noexcept { return cfg_.n; }
  const StreamConfig& config() const noexcept { return cfg_; }

  /// Vertices with degree >= 1, ascending.
  std::vector<VertexId> touched_vertices() const;
  /// All live edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  SortedAdjacency sorted_adjacency() const;

  bool operator==(const AdjacencyGraph& other) const;

 private:
  StreamConfig cfg_;
  std::vector<std::unordered_set<VertexId>> adj_;  // index 0 unused
  std::uint64_t m_live_ = 0;
};

/// Folds apply() over the stream. Errors carry the offending event index.
AdjacencyGraph materialize(std::span<const EdgeEvent> stream,
                           StreamConfig cfg);

/// Peak number of simultaneously live edges; validates turnstile rules.
std::uint64_t peak_live_edges(std::span<const EdgeEvent> stream,
                              std::uint32_t n);

struct RawEvent {
  std::int64_t u = 0;
  std::int64_t v = 0;
  Sign sign = Sign::Insert;
  std::size_t line = 0;
};

/// Parses the text stream format: `+ u v` / `- u v`, `#` comments and
/// blank lines ignored. Only the syntax is checked here.
std::vector<RawEvent> parse_stream_text(std::istream& in);

struct ParsedStream {
  std::vector<EdgeEvent> events;
  std::vector<std::size_t> lines;  // source line of each event
  std::uint32_t n = 0;
};

/// Parses and normalizes. With n == 0 the universe is the largest id seen.
/// Errors carry the 1-based line number.
ParsedStream parse_stream(std::istream& in, std::uint32_t n = 0);

/// Writes events in the text stream format.
void write_stream(std::ostream& out, std::span<const EdgeEvent> events);

}  // namespace dyntri
