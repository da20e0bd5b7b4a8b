#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace miht {

/// Weighted running mean/variance of one attribute for one class (West's
/// incremental update), plus the observed value range.
class GaussianEstimator {
 public:
  static constexpr double kMinVariance = 1e-12;
  static constexpr double kDensityFloor = 1e-300;

  void add(double x, double weight = 1.0);

  double weight() const noexcept { return weight_; }
  double mean() const noexcept { return mean_; }
  /// Sample variance M2 / (W - 1); 0 while W <= 1.
  double variance() const noexcept;
  double stddev() const noexcept;
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  double m2() const noexcept { return m2_; }

  /// log of the normal density, with variance floored at kMinVariance and the
  /// density floored at kDensityFloor. An empty estimator returns the floor.
  double log_density(double x) const;

  /// Estimated weight at or below `threshold` and above it.
  std::pair<double, double> split_mass(double threshold) const;

  /// Rebuilds an estimator from persisted accumulators.
  static GaussianEstimator from_state(double weight, double mean, double m2, double min, double max);

  friend bool operator==(const GaussianEstimator&, const GaussianEstimator&) = default;

 private:
  double weight_ = 0.0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = std::numeric_limits<double>::infinity();
  double max_ = -std::numeric_limits<double>::infinity();
};

/// Per-class Gaussians for one numeric attribute at one leaf.
struct AttributeObserver {
  std::vector<GaussianEstimator> per_class;
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();

  AttributeObserver() = default;
  explicit AttributeObserver(std::size_t n_classes) : per_class(n_classes) {}

  void observe(double x, std::size_t cls, double weight);
  std::vector<double> class_weights() const;

  friend bool operator==(const AttributeObserver&, const AttributeObserver&) = default;
};

}  // namespace miht
