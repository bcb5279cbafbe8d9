#pragma once

#include <functional>
#include <vector>

namespace recordchar {

/// Nodes and weights on the reference interval [-1, 1], nodes ascending.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule; cached, the reference stays valid.
const QuadratureRule& gauss_legendre(int n);

/// n-point Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta with
/// integer alpha, beta >= 0; cached.
const QuadratureRule& gauss_jacobi(int n, int alpha, int beta);

/// Applies a rule to f over [a, b] (weight function folded into the rule).
double apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f,
                  double a, double b);

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Composite 64-node Gauss-Legendre over [a, b]; the panel count doubles
/// until two successive values agree to rel_tol relative to max(1, |I|).
IntegralResult integrate_refining_gl64(const std::function<double(double)>& f,
                                       double a, double b, double rel_tol = 1e-12,
                                       int max_doublings = 12);

/// Locally adaptive Gauss-Legendre with 32-node panels and bisection
/// refinement; throws QuadratureError once max_depth is exhausted.
IntegralResult integrate_adaptive_gl(const std::function<double(double)>& f,
                                     double a, double b, double rel_tol,
                                     double abs_tol, int max_depth = 20);

}  // namespace recordchar
