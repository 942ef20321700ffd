#pragma once

#include <cstdint>

#include "dyntri/stream.hpp"

namespace dyntri {

/// Doulion edge sampling over a dynamic stream. Each edge keeps a fixed
/// coin derived from (seed, edge), so a deletion always finds the edge in
/// the same state its insertion left it.
class DoulionCounter {
 public:
  DoulionCounter(double p, std::uint64_t seed, std::uint32_t n);

  bool retains(VertexId u, VertexId v) const noexcept;
  void update(const EdgeEvent& e) {
    if (retains(e.u, e.v)) retained_.apply(e);
  }

  /// Triangles of the retained graph scaled by 1 / p^3.
  double estimate() const;

  const AdjacencyGraph& retained() const noexcept { return retained_; }
  double p() const noexcept { return p_; }

 private:
  double p_;
  std::uint64_t seed_;
  AdjacencyGraph retained_;
};

double doulion_estimate(std::span<const EdgeEvent> stream, double p,
                        std::uint64_t seed, std::uint32_t n);

}  // namespace dyntri
