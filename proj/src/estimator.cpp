#include "dyntri/estimator.hpp"

#include <cmath>
#include <random>

#include "dyntri/indep_paths.hpp"
#include "dyntri/numeric.hpp"

namespace dyntri {

namespace {

constexpr std::uint64_t kSketchSalt = 0x7e57f2a1ULL;
constexpr std::uint64_t kSamplerSalt = 0x5a3b1e77ULL;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidRange, what);
}

}  // namespace

EstimatorConfig derive_config(double epsilon, double delta, double alpha_min,
                              std::uint32_t n, std::uint64_t m_max,
                              std::uint64_t seed,
                              const ConfigOverrides& overrides) {
  require(epsilon > 0.0 && epsilon <= 1.0, "epsilon must lie in (0, 1]");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
  require(alpha_min > 0.0 && alpha_min <= 1.0, "alpha_min must lie in (0, 1]");
  require(n >= 2 && n <= kMaxUniverse, "n must lie in [2, 2^31 - 2]");
  require(m_max >= 1, "m_max must be at least 1");

  EstimatorConfig cfg;
  cfg.epsilon = epsilon;
  cfg.delta = delta;
  cfg.alpha_min = alpha_min;
  cfg.n = n;
  cfg.m_max = m_max;
  cfg.seed = seed;

  cfg.b = m_max / 18;
  cfg.degenerate = cfg.b == 0;
  cfg.p = cfg.degenerate
              ? 1.0
              : std::min(1.0, 5.0 / (epsilon * std::sqrt(static_cast<double>(cfg.b))));
  cfg.colors = static_cast<std::uint32_t>(std::max(1.0, std::round(1.0 / cfg.p)));
  cfg.s = static_cast<std::uint64_t>(ceil_tolerant(18.0 / (epsilon * epsilon)));
  cfg.K = static_cast<std::uint64_t>(
      ceil_tolerant(36.0 / (epsilon * epsilon * alpha_min) * std::log(2.0 / delta)));

  if (overrides.copies) {
    require(*overrides.copies >= 1, "K override must be at least 1");
    cfg.K = *overrides.copies;
  }
  if (overrides.threshold) {
    require(*overrides.threshold >= 1, "s override must be at least 1");
    cfg.s = *overrides.threshold;
  }
  if (overrides.colors) {
    require(*overrides.colors >= 1, "colors override must be at least 1");
    cfg.colors = *overrides.colors;
  }
  return cfg;
}

SparsifierBank::SparsifierBank(const EstimatorConfig& cfg) : cfg_(cfg) {
  copies_.reserve(cfg.K);
  for (std::uint64_t i = 0; i < cfg.K; ++i) {
    copies_.emplace_back(ColoringFunction(mix64(cfg.seed, i), cfg.colors), cfg.n);
  }
}

void SparsifierBank::ingest(std::span<const EdgeEvent> stream) {
  // Copy-major order keeps one copy's tables hot in cache.
  for (auto& copy : copies_) {
    for (const auto& e : stream) copy.update(e);
  }
}

AlphaResult SparsifierBank::collect() {
  AlphaResult out;
  out.copies.reserve(copies_.size());
  const bool skip_threshold = cfg_.colors == 1 && !cfg_.certify_unsparsified;
  for (std::uint64_t i = 0; i < copies_.size(); ++i) {
    SparsifiedGraph& g = copies_[i].graph();
    CopyDiagnostics d;
    d.copy = i;
    d.m_prime = g.edge_count();
    d.p2_total = g.p2_total();
    if (skip_threshold) {
      d.qualified = d.p2_total > 0;
      d.independent = d.qualified ? 1 : 0;
    } else if (d.p2_total >= cfg_.s && d.m_prime >= 2 * cfg_.s) {
      // Independent 2-paths share no edge, hence the m' >= 2s precheck.
      d.independent = greedy_independent_count(g.sorted_adjacency(), cfg_.s);
      d.qualified = d.independent >= cfg_.s;
    }
    if (d.qualified) {
      g.canonicalize();
      std::mt19937_64 rng(mix64(copies_[i].coloring().seed(), kSamplerSalt));
      const auto draw = g.sample(rng);
      d.sampled = draw->path;
      d.attempts = draw->attempts;
      d.indicator = g.has_edge(draw->path.u, draw->path.w) ? 1 : 0;
      ++out.ell;
      out.triangles_hit += static_cast<std::uint64_t>(*d.indicator);
    }
    out.copies.push_back(std::move(d));
  }
  return out;
}

TriangleEstimator::TriangleEstimator(const EstimatorConfig& cfg)
    : cfg_(cfg),
      two_paths_(cfg.epsilon, cfg.delta, mix64(cfg.seed, kSketchSalt)),
      bank_(cfg) {}

void TriangleEstimator::ingest(std::span<const EdgeEvent> stream) {
  for (const auto& e : stream) two_paths_.update(e);
  bank_.ingest(stream);
}

Report TriangleEstimator::finish() {
  AlphaResult alpha = bank_.collect();
  Report r;
  r.K = cfg_.K;
  r.s = cfg_.s;
  r.p = cfg_.p;
  r.colors = cfg_.colors;
  r.ell = alpha.ell;
  r.triangles_hit = alpha.triangles_hit;
  r.p2_raw = two_paths_.estimate();
  r.p2_hat = std::max(0.0, r.p2_raw);
  r.diagnostics = std::move(alpha.copies);

  if (cfg_.degenerate) {
    r.warnings.push_back("degenerate: m_max < 18 gives b = 0, no sparsification");
  }
  if (cfg_.colors == 1 && !cfg_.certify_unsparsified) {
    r.warnings.push_back("unsparsified: single color, independence threshold not applied");
  }
  if (r.ell == 0) {
    throw Error(ErrorCode::NoQualifiedCopies,
                "no sparsified copy holds " + std::to_string(cfg_.s) +
                    " independent 2-paths; p or s is mis-set for this stream");
  }
  if (2 * r.ell < r.K) {
    r.warnings.push_back("low confidence: only " + std::to_string(r.ell) + " of " +
                         std::to_string(r.K) + " copies qualified (fewer than K/2)");
  }
  r.alpha_hat = alpha.alpha_hat();
  if (r.p2_hat == 0.0 && r.triangles_hit > 0) {
    r.warnings.push_back(
        "inconsistent: P2 estimate clamped to 0 although sampled 2-paths closed triangles");
  }
  r.t3_hat = r.alpha_hat * r.p2_hat / 3.0;
  return r;
}

Report run(std::span<const EdgeEvent> stream, const EstimatorConfig& cfg) {
  TriangleEstimator est(cfg);
  est.ingest(stream);
  return est.finish();
}

}  // namespace dyntri
