#include "recordchar/rng.hpp"

#include <cmath>

#include "recordchar/errors.hpp"

namespace recordchar {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 root(seed);
  SplitMix64 derive(root.next() + 0x9E3779B97F4A7C15ULL * stream);
  for (auto& word : s_) word = derive.next();
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // all-zero state is invalid
}

RngStream::result_type RngStream::operator()() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::uniform01() {
  // Center-of-bin mapping keeps the result strictly inside (0, 1): the top
  // value (2^52 - 0.5) * 2^-52 = 1 - 2^-53 is still representable below 1.
  return (static_cast<double>((*this)() >> 12) + 0.5) * 0x1.0p-52;
}

double RngStream::exponential() { return -std::log(uniform01()); }

double RngStream::gamma_integer(int shape) {
  if (shape < 1) throw DomainError("gamma_integer: shape must be >= 1");
  double sum = 0.0;
  for (int i = 0; i < shape; ++i) sum += exponential();
  return sum;
}

double RngStream::beta_integer(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("beta_integer: a, b must be >= 1");
  const double ga = gamma_integer(a);
  const double gb = gamma_integer(b);
  double ratio = ga / (ga + gb);
  if (ratio <= 0.0) ratio = 0x1.0p-60;
  if (ratio >= 1.0) ratio = 1.0 - 0x1.0p-53;
  return ratio;
}

}  // namespace recordchar
