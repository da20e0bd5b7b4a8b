#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace miht {

/// One labeled multivariate series of `length()` steps and `dims()` variables,
/// stored step-major: value (t, d) lives at `t * dims() + d`.
class MultivariateSeries {
 public:
  MultivariateSeries() = default;

  /// Throws std::invalid_argument unless `values.size() == length * dims`
  /// with both positive.
  MultivariateSeries(std::vector<double> values, std::size_t length, std::size_t dims,
                     std::optional<std::size_t> label = std::nullopt);

  /// Builds from one vector per dimension; all must share a non-zero length.
  static MultivariateSeries from_dimensions(const std::vector<std::vector<double>>& per_dim,
                                            std::optional<std::size_t> label = std::nullopt);

  std::size_t length() const noexcept { return length_; }
  std::size_t dims() const noexcept { return dims_; }
  double at(std::size_t step, std::size_t dim) const { return values_[step * dims_ + dim]; }
  std::span<const double> step(std::size_t t) const {
    return {values_.data() + t * dims_, dims_};
  }
  std::span<const double> values() const noexcept { return values_; }

  const std::optional<std::size_t>& label() const noexcept { return label_; }
  void set_label(std::optional<std::size_t> label) { label_ = label; }

  friend bool operator==(const MultivariateSeries&, const MultivariateSeries&) = default;

 private:
  std::vector<double> values_;
  std::size_t length_ = 0;
  std::size_t dims_ = 0;
  std::optional<std::size_t> label_;
};

struct Dataset {
  std::string name;
  std::vector<std::string> class_names;
  std::vector<MultivariateSeries> series;

  std::size_t size() const noexcept { return series.size(); }
  bool empty() const noexcept { return series.empty(); }
  std::size_t n_classes() const noexcept { return class_names.size(); }
  /// Dimension count shared by every series; 0 for an empty dataset.
  std::size_t dims() const noexcept { return series.empty() ? 0 : series.front().dims(); }
  double mean_length() const;
  std::size_t min_length() const;
  std::vector<std::size_t> class_counts() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

}  // namespace miht
