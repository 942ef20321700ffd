#pragma once

#include <cstdint>
#include <optional>

#include "dyntri/stream.hpp"

namespace dyntri {

/// Exact statistics of a materialized graph.
struct GraphStats {
  std::uint64_t T3 = 0;  // triangles
  std::uint64_t P2 = 0;  // 2-paths, sum over v of C(d_v, 2)
  std::uint64_t F2 = 0;  // sum over v of d_v^2
  std::uint64_t m = 0;
  std::uint64_t n_touched = 0;  // vertices of degree >= 1
  std::optional<double> alpha;  // 3 T3 / P2, absent when P2 == 0
};

/// Edge iterator: for each edge, intersect the smaller neighborhood with
/// the larger one, then divide by three.
std::uint64_t exact_triangles(const AdjacencyGraph& g);
std::uint64_t exact_two_paths(const AdjacencyGraph& g);
std::uint64_t exact_f2(const AdjacencyGraph& g);
/// Throws NoTwoPaths when the graph has no 2-path.
double exact_transitivity(const AdjacencyGraph& g);

GraphStats exact_stats(const AdjacencyGraph& g);

}  // namespace dyntri
