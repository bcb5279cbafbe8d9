#pragma once

#include <string>

namespace recordchar {

/// Cumulative hazards larger than this imply cdf >= 1 - 1e-15: the value is
/// at the upper-tail boundary and cum_hazard refuses to produce it, so that
/// near-infinite hazards never leak into quadrature.
inline constexpr double kMaxCumHazard = 34.538776394910684;  // -ln(1e-15)

/// An absolutely continuous distribution with its hazard machinery:
/// F, f, H(x) = -ln(1 - F(x)), h = H', the inverse of H, and the lower
/// support endpoint l_F. Instances are immutable after construction and all
/// operations are pure, so unrestricted concurrent use is safe.
///
/// The default cum_hazard / hazard / inv_cum_hazard are computed numerically
/// from cdf and pdf; families with closed forms override them.
class ContinuousDistribution {
 public:
  virtual ~ContinuousDistribution() = default;

  virtual double cdf(double x) const = 0;
  virtual double pdf(double x) const = 0;

  /// Lower endpoint of the support (the "guarantee time").
  virtual double lower_endpoint() const = 0;

  /// H(x) = -ln(1 - F(x)). Zero at the lower endpoint, strictly increasing.
  /// Throws DomainError for x < l_F and OverflowError past the tail boundary.
  virtual double cum_hazard(double x) const;

  /// Hazard rate h(x) = f(x) / (1 - F(x)); zero below the support.
  virtual double hazard(double x) const;

  /// The unique x >= l_F with cum_hazard(x) = t. The generic implementation
  /// brackets and bisects, then polishes with Newton steps.
  virtual double inv_cum_hazard(double t) const;

  /// Short human-readable parameter string, e.g. "exponential(l_f=0,rate=1)".
  virtual std::string descriptor() const = 0;
};

/// Exponential with location l_F and rate c: F(x) = 1 - exp(-c (x - l_F)).
class ExponentialDist final : public ContinuousDistribution {
 public:
  ExponentialDist(double l_f, double rate);

  double cdf(double x) const override;
  double pdf(double x) const override;
  double lower_endpoint() const override { return l_f_; }
  double cum_hazard(double x) const override;
  double hazard(double x) const override;
  double inv_cum_hazard(double t) const override;
  std::string descriptor() const override;

  double rate() const { return rate_; }

 private:
  double l_f_;
  double rate_;
};

/// Weibull with shape beta and scale lambda; support starts at 0 and
/// H(x) = (x / lambda)^beta.
class WeibullDist final : public ContinuousDistribution {
 public:
  WeibullDist(double shape, double scale);

  double cdf(double x) const override;
  double pdf(double x) const override;
  double lower_endpoint() const override { return 0.0; }
  double cum_hazard(double x) const override;
  double hazard(double x) const override;
  double inv_cum_hazard(double t) const override;
  std::string descriptor() const override;

  double shape() const { return shape_; }

 private:
  double shape_;
  double scale_;
};

/// Pareto with minimum x_m and tail index alpha; H(x) = alpha ln(x / x_m).
class ParetoDist final : public ContinuousDistribution {
 public:
  ParetoDist(double x_m, double alpha);

  double cdf(double x) const override;
  double pdf(double x) const override;
  double lower_endpoint() const override { return x_m_; }
  double cum_hazard(double x) const override;
  double hazard(double x) const override;
  double inv_cum_hazard(double t) const override;
  std::string descriptor() const override;

 private:
  double x_m_;
  double alpha_;
};

/// Exponentiality diagnostic w(v) = h(v) (v - l_F) / H(v); identically 1 on
/// the exponential family, and tends to 1 at l_F+ whenever h(l_F+) > 0.
double w_diagnostic(const ContinuousDistribution& dist, double v);

}  // namespace recordchar
