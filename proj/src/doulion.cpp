#include "dyntri/doulion.hpp"

#include <limits>

#include "dyntri/hashing.hpp"
#include "dyntri/oracles.hpp"

namespace dyntri {

DoulionCounter::DoulionCounter(double p, std::uint64_t seed, std::uint32_t n)
    : p_(p),
      seed_(seed),
      retained_(StreamConfig{n, std::numeric_limits<std::uint64_t>::max()}) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidRange, "Doulion retention probability must lie in (0, 1]");
  }
}

bool DoulionCounter::retains(VertexId u, VertexId v) const noexcept {
  if (p_ >= 1.0) return true;
  const double coin = static_cast<double>(mix64(seed_, edge_key(u, v)) >> 11) * 0x1.0p-53;
  return coin < p_;
}

double DoulionCounter::estimate() const {
  return static_cast<double>(exact_triangles(retained_)) / (p_ * p_ * p_);
}

double doulion_estimate(std::span<const EdgeEvent> stream, double p,
                        std::uint64_t seed, std::uint32_t n) {
  DoulionCounter counter(p, seed, n);
  for (const auto& e : stream) counter.update(e);
  return counter.estimate();
}

}  // namespace dyntri
