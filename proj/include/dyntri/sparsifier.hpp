#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "dyntri/hashing.hpp"
#include "dyntri/stream.hpp"

namespace dyntri {

/// Seeded vertex coloring f: V -> [1, colors]. A monochromatic sampler
/// with `colors` colors keeps each edge with probability 1 / colors.
class ColoringFunction {
 public:
  ColoringFunction(std::uint64_t seed, std::uint32_t colors);

  /// 1 + mix64(seed, v) mod colors.
  std::uint32_t color(VertexId v) const noexcept {
    if (colors_ == 1) return 1;
    return 1 + static_cast<std::uint32_t>(mix64_keyed(key_, v) % colors_);
  }
  bool monochromatic(VertexId u, VertexId v) const noexcept {
    return colors_ == 1 || color(u) == color(v);
  }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint32_t colors() const noexcept { return colors_; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint32_t colors_;
};

struct SampledTwoPath {
  TwoPath path;
  std::uint64_t attempts = 0;  // draws until acceptance
};

/// Dynamic simple graph whose vertices are shelved by the number of
/// 2-paths they center: a vertex of degree d >= 2 sits in bucket
/// i = floor(log2 C(d, 2)), degree-1 vertices sit in a separate
/// degree-one shelf and degree-0 vertices are dropped. Each bucket keeps
/// its total 2-path count, which gives expected O(1) edge updates and
/// uniform 2-path sampling by bucket choice plus rejection.
///
/// Vertices live in slot records reached through a hash index; each
/// bucket is an array of slots with swap-remove, and each live edge
/// records its position inside both endpoints' neighbor arrays.
class SparsifiedGraph {
 public:
  /// bucket_of() value for degree-1 vertices.
  static constexpr int kDegreeOneShelf = -1;

  explicit SparsifiedGraph(std::uint32_t n);

  /// Throws InconsistentInsert if the edge is already present.
  void insert(VertexId u, VertexId v);
  /// Throws InconsistentDelete if the edge is absent.
  void erase(VertexId u, VertexId v);
  void apply(const EdgeEvent& e) {
    e.sign == Sign::Insert ? insert(e.u, e.v) : erase(e.u, e.v);
  }

  bool has_edge(VertexId u, VertexId w) const {
    return u != w && edges_.contains(edge_key(u, w));
  }

  /// Uniform 2-path; empty when the graph has none. Every rejected draw
  /// restarts from the bucket choice.
  std::optional<SampledTwoPath> sample(std::mt19937_64& rng) const;

  /// Sorts bucket arrays and neighbor arrays so that sampling depends only
  /// on the current edge set, not on update history.
  void canonicalize();

  /// Recomputes all derived state from the edge set; throws
  /// InvariantViolation on any mismatch.
  void audit() const;

  std::uint64_t edge_count() const noexcept { return edges_.size(); }
  std::uint64_t p2_total() const noexcept { return p2_total_; }
  std::size_t bucket_count() const noexcept { return bucket_p2_.size() - 1; }
  std::uint64_t bucket_p2(std::size_t i) const { return bucket_p2_.at(i + 1); }
  std::vector<VertexId> bucket_members(int bucket) const;

  /// nullopt when v has degree 0; kDegreeOneShelf for degree 1.
  std::optional<int> bucket_of(VertexId v) const;
  std::uint32_t degree(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t vertex_count() const noexcept { return index_.size(); }

  SortedAdjacency sorted_adjacency() const;

  /// Bucket of a degree-d vertex (d >= 2); kDegreeOneShelf for d == 1.
  static int bucket_for_degree(std::uint64_t d);
  static std::size_t buckets_for_universe(std::uint32_t n);

 private:
  static constexpr std::int32_t kNoShelf = -1;

  struct Slot {
    VertexId id = 0;
    std::int32_t shelf = kNoShelf;  // 0 = degree-one shelf, i + 1 = bucket i
    std::uint32_t pos = 0;          // index inside shelves_[shelf]
    std::vector<VertexId> nbrs;
  };
  struct EdgePos {
    std::uint32_t in_lo = 0;  // index of the larger endpoint in N(smaller)
    std::uint32_t in_hi = 0;  // index of the smaller endpoint in N(larger)
  };

  std::uint32_t slot_for(VertexId v);
  void remove_neighbor(std::uint32_t s, std::uint32_t pos);
  void relocate(std::uint32_t s, std::uint64_t old_degree);
  void set_position(VertexId owner, VertexId other, std::uint32_t pos);
  static std::int32_t shelf_for_degree(std::uint64_t d);

  std::uint32_t n_;
  std::vector<Slot> slots_;
  std::vector<std::uint32_t> free_slots_;
  absl::flat_hash_map<VertexId, std::uint32_t> index_;
  absl::flat_hash_map<std::uint64_t, EdgePos> edges_;
  std::vector<std::vector<std::uint32_t>> shelves_;
  std::vector<std::uint64_t> bucket_p2_;  // indexed by shelf; [0] stays 0
  std::uint64_t p2_total_ = 0;
};

/// One sparsifier copy: a coloring plus the monochromatic subgraph.
class Sparsifier {
 public:
  Sparsifier(ColoringFunction coloring, std::uint32_t n)
      : coloring_(coloring), graph_(n) {}

  void update(const EdgeEvent& e) {
    if (coloring_.monochromatic(e.u, e.v)) graph_.apply(e);
  }

  const ColoringFunction& coloring() const noexcept { return coloring_; }
  const SparsifiedGraph& graph() const noexcept { return graph_; }
  SparsifiedGraph& graph() noexcept { return graph_; }

 private:
  ColoringFunction coloring_;
  SparsifiedGraph graph_;
};

constexpr std::uint64_t choose2(std::uint64_t d) noexcept {
  return d < 2 ? 0 : d * (d - 1) / 2;
}

}  // namespace dyntri
