#pragma once

#include <cstdint>
#include <random>

#include "gformlab/error.hpp"

namespace gformlab {

/// Seeded generator for all randomized sweeps. std::mt19937_64 output is
/// fixed by the standard; the range mapping below (rejection sampling) is
/// ours, so draws are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw DomainError("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Independent child stream, so sub-sweeps do not shift each other.
  Rng fork(std::uint64_t salt) { return Rng(seed_ * 0x9E3779B97F4A7C15ULL ^ (salt + 0x632BE59BD9B4E019ULL)); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace gformlab
