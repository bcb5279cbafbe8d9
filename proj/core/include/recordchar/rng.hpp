#pragma once

#include <array>
#include <cstdint>

namespace recordchar {

/// SplitMix64 (Steele, Lea, Vigna). Used for seeding and stream derivation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256++ with splittable per-stream seeding: the state of stream s is
/// derived from (seed, s) through SplitMix64 with the golden-gamma offset, so
/// any stream is reachable in O(1) and replications can run in parallel while
/// staying bit-reproducible.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~static_cast<result_type>(0); }

  result_type operator()();

  /// Uniform draw in the open interval (0, 1), 52-bit resolution.
  double uniform01();

  /// Standard exponential via inversion; strictly positive.
  double exponential();

  /// Gamma(shape, 1) for integer shape >= 1, as a sum of exponentials.
  double gamma_integer(int shape);

  /// Beta(a, b) for integer a, b >= 1 via the ratio-of-gammas construction;
  /// result clamped to the open interval (0, 1).
  double beta_integer(int a, int b);

 private:
  std::array<std::uint64_t, 4> s_;
};

}  // namespace recordchar
