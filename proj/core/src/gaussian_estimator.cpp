#include "miht/gaussian_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace miht {

void GaussianEstimator::add(double x, double weight) {
  const double total = weight_ + weight;
  const double delta = x - mean_;
  const double step = delta * weight / total;
  mean_ += step;
  m2_ += weight_ * delta * step;
  weight_ = total;
  min_ = std::min(min_, x);
  max_ = std::max(max_, x);
}

double GaussianEstimator::variance() const noexcept {
  return weight_ > 1.0 ? std::max(0.0, m2_ / (weight_ - 1.0)) : 0.0;
}

double GaussianEstimator::stddev() const noexcept { return std::sqrt(variance()); }

double GaussianEstimator::log_density(double x) const {
  static const double log_floor = std::log(kDensityFloor);
  if (!(weight_ > 0.0)) return log_floor;
  const double var = std::max(variance(), kMinVariance);
  const double d = x - mean_;
  const double log_pdf = -0.5 * std::log(2.0 * std::numbers::pi * var) - d * d / (2.0 * var);
  return std::max(log_pdf, log_floor);
}

std::pair<double, double> GaussianEstimator::split_mass(double threshold) const {
  if (!(weight_ > 0.0)) return {0.0, 0.0};
  if (threshold < min_) return {0.0, weight_};
  if (threshold >= max_) return {weight_, 0.0};
  const double sd = stddev();
  if (!(sd > 0.0)) return threshold >= mean_ ? std::pair{weight_, 0.0} : std::pair{0.0, weight_};
  const double cdf = 0.5 * std::erfc(-(threshold - mean_) / (sd * std::numbers::sqrt2));
  const double left = weight_ * cdf;
  return {left, weight_ - left};
}

GaussianEstimator GaussianEstimator::from_state(double weight, double mean, double m2, double min,
                                                double max) {
  GaussianEstimator g;
  g.weight_ = weight;
  g.mean_ = mean;
  g.m2_ = m2;
  g.min_ = min;
  g.max_ = max;
  return g;
}

void AttributeObserver::observe(double x, std::size_t cls, double weight) {
  per_class[cls].add(x, weight);
  min = std::min(min, x);
  max = std::max(max, x);
}

std::vector<double> AttributeObserver::class_weights() const {
  std::vector<double> w(per_class.size());
  std::transform(per_class.begin(), per_class.end(), w.begin(),
                 [](const GaussianEstimator& g) { return g.weight(); });
  return w;
}

}  // namespace miht
