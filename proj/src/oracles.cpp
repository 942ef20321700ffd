#include "dyntri/oracles.hpp"

namespace dyntri {

std::uint64_t exact_triangles(const AdjacencyGraph& g) {
  std::uint64_t closed = 0;
  for (VertexId u = 1; u <= g.universe(); ++u) {
    const auto& nu = g.neighbors(u);
    for (VertexId v : nu) {
      if (v <= u) continue;
      const auto& nv = g.neighbors(v);
      const auto& small = nu.size() <= nv.size() ? nu : nv;
      const auto& large = nu.size() <= nv.size() ? nv : nu;
      for (VertexId w : small) closed += large.contains(w);
    }
  }
  return closed / 3;
}

std::uint64_t exact_two_paths(const AdjacencyGraph& g) {
  std::uint64_t total = 0;
  for (VertexId v = 1; v <= g.universe(); ++v) {
    std::uint64_t d = g.degree(v);
    total += d * (d - (d > 0)) / 2;
  }
  return total;
}

std::uint64_t exact_f2(const AdjacencyGraph& g) {
  std::uint64_t total = 0;
  for (VertexId v = 1; v <= g.universe(); ++v) {
    std::uint64_t d = g.degree(v);
    total += d * d;
  }
  return total;
}

double exact_transitivity(const AdjacencyGraph& g) {
  const std::uint64_t p2 = exact_two_paths(g);
  if (p2 == 0) {
    throw Error(ErrorCode::NoTwoPaths, "transitivity undefined: graph has no 2-paths");
  }
  return 3.0 * static_cast<double>(exact_triangles(g)) / static_cast<double>(p2);
}

GraphStats exact_stats(const AdjacencyGraph& g) {
  GraphStats s;
  s.T3 = exact_triangles(g);
  s.P2 = exact_two_paths(g);
  s.F2 = exact_f2(g);
  s.m = g.edge_count();
  s.n_touched = g.touched_vertices().size();
  if (s.P2 > 0) {
    s.alpha = 3.0 * static_cast<double>(s.T3) / static_cast<double>(s.P2);
  }
  return s;
}

}  // namespace dyntri
