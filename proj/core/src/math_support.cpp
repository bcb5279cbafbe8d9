#include "recordchar/math_support.hpp"

#include <string>

#include "recordchar/errors.hpp"

namespace recordchar {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer coefficient exceeds the 64-bit range");
  }
  return out;
}

std::int64_t checked_binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  std::int64_t c = 1;
  // c stays integral at every step: after step i it equals C(n-k+i, i).
  for (int i = 1; i <= k; ++i) {
    c = checked_mul(c, n - k + i) / i;
  }
  return c;
}

std::int64_t checked_falling_factorial(int n, int m) {
  if (m < 0) throw DomainError("falling factorial: m must be >= 0");
  std::int64_t c = 1;
  for (int j = 0; j < m; ++j) {
    c = checked_mul(c, n - j);
  }
  return c;
}

double factorial_as_double(int n) {
  if (n < 0 || n > 170) {
    throw OverflowError("factorial_as_double: n out of [0, 170], got " +
                        std::to_string(n));
  }
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double beta_as_double(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("beta_as_double: a, b must be >= 1");
  return factorial_as_double(a - 1) * factorial_as_double(b - 1) /
         factorial_as_double(a + b - 1);
}

}  // namespace recordchar
