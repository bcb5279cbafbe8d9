#pragma once

#include <cstdint>

namespace recordchar {

/// a*b with overflow detection; throws OverflowError past 64 bits.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Binomial coefficient in exact integer arithmetic. Out-of-range (k < 0 or
/// k > n) yields 0, matching the usual summation convention.
std::int64_t checked_binomial(int n, int k);

/// Falling factorial (n)_(m) = n (n-1) ... (n-m+1), with (n)_(0) = 1.
std::int64_t checked_falling_factorial(int n, int m);

/// n! as a double; n must be in [0, 170].
double factorial_as_double(int n);

/// Beta(a, b) for integer a, b >= 1: (a-1)!(b-1)!/(a+b-1)!.
double beta_as_double(int a, int b);

/// base^exp for integer exp >= 0 by binary exponentiation; 0^0 = 1.
inline double ipow(double base, int exp) {
  double r = 1.0;
  double b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace recordchar
