#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "dyntri/hashing.hpp"
#include "dyntri/stream.hpp"

namespace dyntri {

/// Tug-of-war sketch of the second frequency moment of an item stream.
///
/// A rows x cols grid of signed counters; cell (i, j) owns an independent
/// 4-wise independent sign hash h_ij and holds sum(weight * h_ij(item)).
/// The estimate is the median over rows of the mean over columns of the
/// squared counters.
///
/// The sketch is linear, so updates are buffered as net per-item weights
/// and folded into the counters lazily; every observable (counters,
/// estimate, merge) sees exactly the same values as eager updating.
class F2Sketch {
 public:
  F2Sketch(std::uint32_t rows, std::uint32_t cols, std::uint64_t seed);

  /// cols = ceil(216 / eps^2), rows = ceil(48 ln(2 / delta)): relative error
  /// eps / 6 with probability at least 1 - delta / 2.
  static F2Sketch for_accuracy(double epsilon, double delta, std::uint64_t seed);
  static std::uint32_t columns_for(double epsilon);
  static std::uint32_t rows_for(double delta);

  void update(VertexId item, std::int64_t weight);

  double estimate() const;

  /// Entrywise sum. Throws SeedMismatch unless shape and seed agree.
  void merge(const F2Sketch& other);

  std::span<const std::int64_t> counters() const;
  std::int64_t counter(std::uint32_t row, std::uint32_t col) const;

  /// The hash owning cell (row, col); exposed for independent checks.
  SignHash cell_hash(std::uint32_t row, std::uint32_t col) const;

  std::uint32_t rows() const noexcept { return rows_; }
  std::uint32_t cols() const noexcept { return cols_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  static constexpr std::size_t kPendingLimit = 4096;

  void flush() const;

  std::uint32_t rows_;
  std::uint32_t cols_;
  std::uint64_t seed_;
  std::vector<std::uint32_t> a0_, a1_, a2_, a3_;
  mutable std::vector<std::int64_t> counters_;
  mutable std::unordered_map<VertexId, std::int64_t> pending_;
  // Upper bound on every |counter|; guards against int64 overflow.
  std::uint64_t mass_ = 0;
};

F2Sketch merge(const F2Sketch& a, const F2Sketch& b);

}  // namespace dyntri
