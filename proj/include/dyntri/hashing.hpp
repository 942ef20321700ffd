#pragma once

#include <cstdint>

namespace dyntri {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mix64(seed, x) with mix64(seed) precomputed as key.
constexpr std::uint64_t mix64_keyed(std::uint64_t key, std::uint64_t x) noexcept {
  return mix64(key ^ mix64(x ^ 0x6a09e667f3bcc909ULL));
}
// Keyed two-round mix; used as the seeded pseudorandom function behind
// vertex colorings, per-copy seeds and Doulion coins.
constexpr std::uint64_t mix64(std::uint64_t seed, std::uint64_t x) noexcept {
  return mix64_keyed(mix64(seed), x);
}

/// Counter-mode splitmix64 generator. Cheap enough to fill the coefficient
/// tables of large sketches.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Arithmetic in GF(2^31 - 1).
struct Mersenne31 {
  static constexpr std::uint64_t kPrime = (1ULL << 31) - 1;

  static constexpr std::uint64_t reduce(std::uint64_t x) noexcept {
    x = (x & kPrime) + (x >> 31);
    x = (x & kPrime) + (x >> 31);
    return x >= kPrime ? x - kPrime : x;
  }
};

/// A member of the degree-3 polynomial family over GF(2^31 - 1), which is
/// 4-wise independent. The ±1 sign is the parity of the canonical residue.
struct SignHash {
  std::uint32_t a0 = 0, a1 = 0, a2 = 0, a3 = 0;

  // Two coefficients per 64-bit draw, 31 bits each. The residue 0 is twice
  // as likely as any other (2^-30 instead of 2^-31), which is immaterial.
  static SignHash draw(SplitMix64& gen) noexcept {
    constexpr std::uint64_t P = Mersenne31::kPrime;
    const std::uint64_t lo = gen.next(), hi = gen.next();
    SignHash h;
    h.a0 = static_cast<std::uint32_t>(Mersenne31::reduce(lo & P));
    h.a1 = static_cast<std::uint32_t>(Mersenne31::reduce((lo >> 32) & P));
    h.a2 = static_cast<std::uint32_t>(Mersenne31::reduce(hi & P));
    h.a3 = static_cast<std::uint32_t>(Mersenne31::reduce((hi >> 32) & P));
    return h;
  }

  constexpr std::uint64_t value(std::uint64_t x) const noexcept {
    x = Mersenne31::reduce(x);
    std::uint64_t acc = a3;
    acc = Mersenne31::reduce(acc * x + a2);
    acc = Mersenne31::reduce(acc * x + a1);
    acc = Mersenne31::reduce(acc * x + a0);
    return acc;
  }

  constexpr int sign(std::uint64_t x) const noexcept {
    return (value(x) & 1U) ? 1 : -1;
  }
};

}  // namespace dyntri
