#include "dyntri/f2_sketch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#if defined(__x86_64__) && defined(__GNUC__)
#include <immintrin.h>
#endif

#include "dyntri/numeric.hpp"

namespace dyntri {

F2Sketch::F2Sketch(std::uint32_t rows, std::uint32_t cols, std::uint64_t seed)
    : rows_(rows), cols_(cols), seed_(seed) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::InvalidRange, "sketch needs at least one row and one column");
  }
  const std::size_t cells = std::size_t{rows} * cols;
  a0_.resize(cells);
  a1_.resize(cells);
  a2_.resize(cells);
  a3_.resize(cells);
  SplitMix64 gen(mix64(seed, 0xf2));
  for (std::size_t c = 0; c < cells; ++c) {
    const SignHash h = SignHash::draw(gen);
    a0_[c] = h.a0;
    a1_[c] = h.a1;
    a2_[c] = h.a2;
    a3_[c] = h.a3;
  }
  counters_.assign(cells, 0);
}

std::uint32_t F2Sketch::columns_for(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::InvalidRange, "epsilon must lie in (0, 1]");
  }
  return static_cast<std::uint32_t>(ceil_tolerant(216.0 / (epsilon * epsilon)));
}

std::uint32_t F2Sketch::rows_for(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::InvalidRange, "delta must lie in (0, 1)");
  }
  return static_cast<std::uint32_t>(ceil_tolerant(48.0 * std::log(2.0 / delta)));
}

F2Sketch F2Sketch::for_accuracy(double epsilon, double delta, std::uint64_t seed) {
  return F2Sketch(rows_for(delta), columns_for(epsilon), seed);
}

void F2Sketch::update(VertexId item, std::int64_t weight) {
  if (weight == 0) return;
  const std::uint64_t add = weight < 0 ? 0 - static_cast<std::uint64_t>(weight)
                                       : static_cast<std::uint64_t>(weight);
  if (add > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) - mass_) {
    throw Error(ErrorCode::SketchOverflow, "sketch counter mass exceeds 64-bit range");
  }
  mass_ += add;
  pending_[item] += weight;
  if (pending_.size() >= kPendingLimit) flush();
}

namespace {

constexpr std::uint64_t kP = Mersenne31::kPrime;

struct FoldArgs {
  const std::uint32_t* a0;
  const std::uint32_t* a1;
  const std::uint32_t* a2;
  const std::uint32_t* a3;
  std::int64_t* out;
  std::size_t begin, end;
  std::uint64_t x, x2, x3;
  std::int64_t w;
};

// Adds w * h_c(x) to out[c] for c in [begin, end).
void fold_scalar(const FoldArgs& f) {
  for (std::size_t c = f.begin; c < f.end; ++c) {
    // Each product is below 2^62 and the four-term sum below 2^64.
    std::uint64_t s = std::uint64_t{f.a0[c]} + std::uint64_t{f.a1[c]} * f.x +
                      std::uint64_t{f.a2[c]} * f.x2 + std::uint64_t{f.a3[c]} * f.x3;
    s = (s & kP) + (s >> 31);
    s = (s & kP) + (s >> 31);
    s = s >= kP ? s - kP : s;
    f.out[c] += (s & 1U) ? f.w : -f.w;
  }
}

#if defined(__x86_64__) && defined(__GNUC__)
__attribute__((target("avx2"))) inline __m256i widen(const std::uint32_t* a) {
  return _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a)));
}

__attribute__((target("avx2"))) void fold_avx2(const FoldArgs& f) {
  const __m256i x = _mm256_set1_epi64x(static_cast<long long>(f.x));
  const __m256i x2 = _mm256_set1_epi64x(static_cast<long long>(f.x2));
  const __m256i x3 = _mm256_set1_epi64x(static_cast<long long>(f.x3));
  const __m256i p = _mm256_set1_epi64x(static_cast<long long>(kP));
  const __m256i pm1 = _mm256_set1_epi64x(static_cast<long long>(kP - 1));
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i w = _mm256_set1_epi64x(f.w);
  std::size_t c = f.begin;
  for (; c + 4 <= f.end; c += 4) {
    __m256i s = _mm256_add_epi64(widen(f.a0 + c), _mm256_mul_epu32(widen(f.a1 + c), x));
    s = _mm256_add_epi64(s, _mm256_mul_epu32(widen(f.a2 + c), x2));
    s = _mm256_add_epi64(s, _mm256_mul_epu32(widen(f.a3 + c), x3));
    s = _mm256_add_epi64(_mm256_and_si256(s, p), _mm256_srli_epi64(s, 31));
    s = _mm256_add_epi64(_mm256_and_si256(s, p), _mm256_srli_epi64(s, 31));
    s = _mm256_sub_epi64(s, _mm256_and_si256(_mm256_cmpgt_epi64(s, pm1), p));
    // m is 0 for odd residues and all ones for even ones; (w ^ m) - m
    // is then +w or -w.
    const __m256i m = _mm256_sub_epi64(_mm256_and_si256(s, one), one);
    const __m256i term = _mm256_sub_epi64(_mm256_xor_si256(w, m), m);
    auto* dst = reinterpret_cast<__m256i*>(f.out + c);
    _mm256_storeu_si256(dst, _mm256_add_epi64(_mm256_loadu_si256(dst), term));
  }
  FoldArgs tail = f;
  tail.begin = c;
  fold_scalar(tail);
}

bool have_avx2() {
  static const bool yes = __builtin_cpu_supports("avx2");
  return yes;
}
#endif

void fold(const FoldArgs& f) {
#if defined(__x86_64__) && defined(__GNUC__)
  if (have_avx2()) {
    fold_avx2(f);
    return;
  }
#endif
  fold_scalar(f);
}

}  // namespace

void F2Sketch::flush() const {
  if (pending_.empty()) return;
  struct Item {
    std::uint64_t x, x2, x3;
    std::int64_t w;
  };
  std::vector<Item> items;
  items.reserve(pending_.size());
  for (const auto& [item, w] : pending_) {
    if (w == 0) continue;
    const std::uint64_t x = Mersenne31::reduce(item);
    const std::uint64_t x2 = Mersenne31::reduce(x * x);
    items.push_back({x, x2, Mersenne31::reduce(x2 * x), w});
  }
  pending_.clear();
  // Tiles keep a slice of coefficients cache-resident across items.
  constexpr std::size_t kTile = 2048;
  const std::size_t cells = counters_.size();
  for (std::size_t b = 0; b < cells; b += kTile) {
    for (const Item& it : items) {
      fold({a0_.data(), a1_.data(), a2_.data(), a3_.data(), counters_.data(), b,
            std::min(cells, b + kTile), it.x, it.x2, it.x3, it.w});
    }
  }
}

double F2Sketch::estimate() const {
  flush();
  std::vector<double> row_means(rows_);
  for (std::uint32_t i = 0; i < rows_; ++i) {
    double sum = 0.0;
    const std::int64_t* row = counters_.data() + std::size_t{i} * cols_;
    for (std::uint32_t j = 0; j < cols_; ++j) {
      const double c = static_cast<double>(row[j]);
      sum += c * c;
    }
    row_means[i] = sum / cols_;
  }
  return median(row_means);
}

void F2Sketch::merge(const F2Sketch& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_ || seed_ != other.seed_) {
    throw Error(ErrorCode::SeedMismatch,
                "cannot merge sketches with different shapes or seeds");
  }
  if (other.mass_ > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) - mass_) {
    throw Error(ErrorCode::SketchOverflow, "merged counter mass exceeds 64-bit range");
  }
  flush();
  other.flush();
  for (std::size_t c = 0; c < counters_.size(); ++c) {
    counters_[c] += other.counters_[c];
  }
  mass_ += other.mass_;
}

std::span<const std::int64_t> F2Sketch::counters() const {
  flush();
  return counters_;
}

std::int64_t F2Sketch::counter(std::uint32_t row, std::uint32_t col) const {
  flush();
  return counters_.at(std::size_t{row} * cols_ + col);
}

SignHash F2Sketch::cell_hash(std::uint32_t row, std::uint32_t col) const {
  const std::size_t c = std::size_t{row} * cols_ + col;
  return SignHash{a0_.at(c), a1_.at(c), a2_.at(c), a3_.at(c)};
}

F2Sketch merge(const F2Sketch& a, const F2Sketch& b) {
  F2Sketch out = a;
  out.merge(b);
  return out;
}

}  // namespace dyntri
