#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "miht/config.hpp"
#include "miht/series.hpp"

namespace miht {

/// Window sizes resolved to step counts against a training set.
struct ResolvedParams {
  std::size_t window = 2;  ///< steps per instance (omega)
  std::size_t stride = 1;  ///< steps between consecutive window starts (lambda)
  std::size_t k = 1;
  std::size_t grace_period = 1;  ///< instances between split attempts (kappa)

  friend bool operator==(const ResolvedParams&, const ResolvedParams&) = default;
};

/// One window flattened dimension-major: attribute `d * window + t` holds
/// dimension d at window offset t.
struct Instance {
  std::vector<double> attributes;
  std::size_t bag_index = 0;
};

struct Bag {
  std::vector<Instance> instances;
  std::optional<std::size_t> label;
  std::size_t source_length = 0;

  std::size_t size() const noexcept { return instances.size(); }
};

/// Attribute index of (dimension, window offset) and its inverse.
constexpr std::size_t attribute_index(std::size_t dim, std::size_t offset, std::size_t window) {
  return dim * window + offset;
}
struct AttributeLocation {
  std::size_t dim;
  std::size_t offset;
};
constexpr AttributeLocation locate_attribute(std::size_t attribute, std::size_t window) {
  return {attribute / window, attribute % window};
}

/// Number of instances a series of `length` steps produces.
std::size_t bag_size(std::size_t length, std::size_t window, std::size_t stride);

/// Window count at a possibly fractional mean length: floor((L - w) / s) + 1,
/// or 1 when L < w.
double mean_bag_size(double mean_length, std::size_t window, std::size_t stride);

/// Throws ConfigError on an empty set, mean length < 2, or fractions out of range.
ResolvedParams resolve_params(const Dataset& train, const TrainConfig& config);

/// Windows start at 0, stride, 2*stride, ... while start + window <= length.
/// A series shorter than the window yields one instance padded by repeating
/// its last step.
Bag build_bag(const MultivariateSeries& series, const ResolvedParams& params);

std::vector<Bag> build_bags(const Dataset& dataset, const ResolvedParams& params);

}  // namespace miht
