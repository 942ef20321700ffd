#pragma once

#include <cstdint>

#include "dyntri/f2_sketch.hpp"
#include "dyntri/stream.hpp"

namespace dyntri {

/// Streams P2 = F2 / 2 - m: every edge event feeds both endpoints into an
/// F2 sketch and adjusts an exact edge counter.
class TwoPathEstimator {
 public:
  explicit TwoPathEstimator(F2Sketch sketch) : sketch_(std::move(sketch)) {}
  TwoPathEstimator(double epsilon, double delta, std::uint64_t seed)
      : sketch_(F2Sketch::for_accuracy(epsilon, delta, seed)) {}

  void update(const EdgeEvent& e) {
    const int w = weight(e.sign);
    sketch_.update(e.u, w);
    sketch_.update(e.v, w);
    m_net_ += w;
  }

  /// Unclamped; may be negative when sketch noise dominates a tiny P2.
  double estimate() const {
    return sketch_.estimate() / 2.0 - static_cast<double>(m_net_);
  }

  void merge(const TwoPathEstimator& other) {
    sketch_.merge(other.sketch_);
    m_net_ += other.m_net_;
  }

  std::int64_t m_net() const noexcept { return m_net_; }
  const F2Sketch& sketch() const noexcept { return sketch_; }

 private:
  F2Sketch sketch_;
  std::int64_t m_net_ = 0;
};

}  // namespace dyntri
