#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace dyntri {

// ceil() that ignores floating-point noise just above an integer, so that
// e.g. 18 / 0.3^2 yields 200 rather than 201.
inline double ceil_tolerant(double x) {
  return std::ceil(x - 1e-9 * std::max(1.0, std::abs(x)));
}

// Median; the mean of the two middle values for even sizes. Reorders `v`.
inline double median(std::vector<double>& v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lower + upper);
}

}  // namespace dyntri
