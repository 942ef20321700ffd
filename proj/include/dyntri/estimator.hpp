#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dyntri/sparsifier.hpp"
#include "dyntri/stream.hpp"
#include "dyntri/two_path.hpp"

namespace dyntri {

struct ConfigOverrides {
  std::optional<std::uint64_t> copies;  // K
  std::optional<std::uint64_t> threshold;  // s
  std::optional<std::uint32_t> colors;
};

struct EstimatorConfig {
  double epsilon = 0.3;
  double delta = 0.1;
  double alpha_min = 0.05;
  std::uint32_t n = 2;
  std::uint64_t m_max = 1;
  std::uint64_t seed = 0;

  // Derived.
  std::uint64_t b = 0;      // floor(m_max / 18)
  double p = 1.0;           // min(1, 5 / (epsilon sqrt(b)))
  std::uint32_t colors = 1; // max(1, round(1 / p)) unless overridden
  std::uint64_t s = 0;      // ceil(18 / epsilon^2) unless overridden
  std::uint64_t K = 0;      // ceil(36 / (epsilon^2 alpha_min) ln(2 / delta))
  bool degenerate = false;  // b == 0: no sparsification possible

  // With a single color every copy holds the whole graph and the sampled
  // 2-path is exactly uniform over G, so the independence threshold only
  // guards a bias that cannot occur. Set to enforce it anyway.
  bool certify_unsparsified = false;

  double sampling_probability() const noexcept { return 1.0 / colors; }
};

EstimatorConfig derive_config(double epsilon, double delta, double alpha_min,
                              std::uint32_t n, std::uint64_t m_max,
                              std::uint64_t seed,
                              const ConfigOverrides& overrides = {});

struct CopyDiagnostics {
  std::uint64_t copy = 0;
  std::uint64_t m_prime = 0;   // live monochromatic edges
  std::uint64_t p2_total = 0;  // 2-paths in the sparsified graph
  std::uint64_t independent = 0;  // certified independent 2-paths, capped at s
  bool qualified = false;
  std::optional<int> indicator;   // X_i, qualified copies only
  std::optional<TwoPath> sampled;
  std::uint64_t attempts = 0;     // sampler draws
};

struct AlphaResult {
  std::uint64_t ell = 0;
  std::uint64_t triangles_hit = 0;  // sum of X_i
  std::vector<CopyDiagnostics> copies;

  double alpha_hat() const {
    return ell == 0 ? 0.0 : static_cast<double>(triangles_hit) / static_cast<double>(ell);
  }
};

/// K independent monochromatic sparsifiers, seeds mix(seed, i).
class SparsifierBank {
 public:
  explicit SparsifierBank(const EstimatorConfig& cfg);

  /// One event through every copy.
  void update(const EdgeEvent& e) {
    for (auto& copy : copies_) copy.update(e);
  }
  /// The whole stream copy by copy; same end state as repeated update().
  void ingest(std::span<const EdgeEvent> stream);

  /// Certifies every copy against the threshold and draws one 2-path from
  /// each qualified copy. Canonicalizes the copies first, so the outcome
  /// depends only on the final edge set and the seed.
  AlphaResult collect();

  std::span<const Sparsifier> copies() const noexcept { return copies_; }

 private:
  EstimatorConfig cfg_;
  std::vector<Sparsifier> copies_;
};

struct Report {
  double p2_hat = 0.0;  // clamped at 0
  double p2_raw = 0.0;
  double alpha_hat = 0.0;
  double t3_hat = 0.0;
  std::uint64_t ell = 0;
  std::uint64_t K = 0;
  std::uint64_t s = 0;
  double p = 1.0;
  std::uint32_t colors = 1;
  std::uint64_t triangles_hit = 0;
  std::vector<CopyDiagnostics> diagnostics;
  std::vector<std::string> warnings;
};

/// Streaming front end: P2 estimator plus the sparsifier bank.
class TriangleEstimator {
 public:
  explicit TriangleEstimator(const EstimatorConfig& cfg);

  void update(const EdgeEvent& e) {
    two_paths_.update(e);
    bank_.update(e);
  }
  void ingest(std::span<const EdgeEvent> stream);

  /// Throws NoQualifiedCopies when no copy passes the threshold.
  Report finish();

  const EstimatorConfig& config() const noexcept { return cfg_; }

 private:
  EstimatorConfig cfg_;
  TwoPathEstimator two_paths_;
  SparsifierBank bank_;
};

/// Single pass over a turnstile-valid stream; deletions are handled the
/// same way as insertions.
Report run(std::span<const EdgeEvent> stream, const EstimatorConfig& cfg);

}  // namespace dyntri
