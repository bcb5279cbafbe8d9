#include "recordchar/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

#include "recordchar/errors.hpp"

namespace recordchar {

namespace {

// Eigenvalues of a symmetric tridiagonal matrix together with the first
// component of each normalized eigenvector, by implicit-shift QL. This is
// the Golub-Welsch setup: nodes are the eigenvalues, weights come from the
// squared first components.
void tridiag_eigen_first_components(std::vector<double>& d, std::vector<double>& e,
                                    std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  z.assign(n, 0.0);
  if (n == 0) return;
  z[0] = 1.0;
  if (n == 1) return;
  e.resize(n, 0.0);

  for (int l = 0; l < n; ++l) {
    for (int iter = 0;; ++iter) {
      if (iter > 60) throw ConvergenceError("gauss rule: QL iteration did not converge");
      int m = l;
      while (m < n - 1) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
        ++m;
      }
      if (m == l) break;

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> ds(n), zs(n);
  for (int i = 0; i < n; ++i) {
    ds[i] = d[order[i]];
    zs[i] = z[order[i]];
  }
  d.swap(ds);
  z.swap(zs);
}

QuadratureRule make_gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("gauss rule: node count must be >= 1");
  const double ab = alpha + beta;

  // Three-term recurrence coefficients of the orthonormal Jacobi polynomials.
  std::vector<double> d(n);
  std::vector<double> e(n > 1 ? n - 1 : 0);
  d[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + ab;
    d[k] = (beta * beta - alpha * alpha) / (t * (t + 2.0));
  }
  for (int k = 1; k <= n - 1; ++k) {
    double b2;
    if (k == 1) {
      b2 = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      const double t = 2.0 * k + ab;
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
           (t * t * (t + 1.0) * (t - 1.0));
    }
    e[k - 1] = std::sqrt(b2);
  }

  std::vector<double> z;
  tridiag_eigen_first_components(d, e, z);

  // Zeroth moment of the weight over [-1, 1].
  const double mu0 = std::pow(2.0, ab + 1.0) *
                     std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                              std::lgamma(ab + 2.0));
  QuadratureRule rule;
  rule.nodes = std::move(d);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.weights[i] = mu0 * z[i] * z[i];
  return rule;
}

const QuadratureRule& cached_rule(int n, int alpha, int beta) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, alpha, beta}];
  if (!slot) slot = std::make_unique<QuadratureRule>(make_gauss_jacobi(n, alpha, beta));
  return *slot;
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) { return cached_rule(n, 0, 0); }

const QuadratureRule& gauss_jacobi(int n, int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw DomainError("gauss_jacobi: alpha, beta must be >= 0");
  return cached_rule(n, alpha, beta);
}

double apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f,
                  double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

IntegralResult integrate_refining_gl64(const std::function<double(double)>& f,
                                       double a, double b, double rel_tol,
                                       int max_doublings) {
  const QuadratureRule& rule = gauss_legendre(64);
  auto composite = [&](int panels) {
    const double width = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
      sum += apply_rule(rule, f, a + p * width, a + (p + 1) * width);
    }
    return sum;
  };

  double prev = composite(1);
  for (int level = 1; level <= max_doublings; ++level) {
    const double cur = composite(1 << level);
    const double change = std::abs(cur - prev);
    if (change <= rel_tol * std::max(1.0, std::abs(cur))) {
      return {cur, change};
    }
    prev = cur;
  }
  throw QuadratureError("integrate_refining_gl64: no convergence after panel-halving budget");
}

IntegralResult integrate_adaptive_gl(const std::function<double(double)>& f,
                                     double a, double b, double rel_tol,
                                     double abs_tol, int max_depth) {
  const QuadratureRule& rule = gauss_legendre(32);

  std::function<IntegralResult(double, double, double, double, int)> refine =
      [&](double lo, double hi, double whole, double tol, int depth) -> IntegralResult {
    const double mid = 0.5 * (lo + hi);
    const double left = apply_rule(rule, f, lo, mid);
    const double right = apply_rule(rule, f, mid, hi);
    const double err = std::abs(left + right - whole);
    if (err <= tol || err <= 1e-16 * std::abs(left + right)) {
      return {left + right, err};
    }
    if (depth >= max_depth) {
      throw QuadratureError("integrate_adaptive_gl: refinement depth exhausted");
    }
    const IntegralResult rl = refine(lo, mid, left, 0.5 * tol, depth + 1);
    const IntegralResult rr = refine(mid, hi, right, 0.5 * tol, depth + 1);
    return {rl.value + rr.value, rl.error_estimate + rr.error_estimate};
  };

  const double first = apply_rule(rule, f, a, b);
  const double tol = std::max(abs_tol, rel_tol * std::max(1.0, std::abs(first)));
  return refine(a, b, first, tol, 0);
}

}  // namespace recordchar
