#include "miht/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace miht {

MultivariateSeries::MultivariateSeries(std::vector<double> values, std::size_t length,
                                       std::size_t dims, std::optional<std::size_t> label)
    : values_(std::move(values)), length_(length), dims_(dims), label_(label) {
  if (length_ == 0 || dims_ == 0) {
    throw std::invalid_argument("series needs at least one step and one dimension");
  }
  if (values_.size() != length_ * dims_) {
    throw std::invalid_argument("series value count does not match length x dims");
  }
}

MultivariateSeries MultivariateSeries::from_dimensions(
    const std::vector<std::vector<double>>& per_dim, std::optional<std::size_t> label) {
  if (per_dim.empty() || per_dim.front().empty()) {
    throw std::invalid_argument("series needs at least one step and one dimension");
  }
  const std::size_t length = per_dim.front().size();
  const std::size_t dims = per_dim.size();
  std::vector<double> values(length * dims);
  for (std::size_t d = 0; d < dims; ++d) {
    if (per_dim[d].size() != length) {
      throw std::invalid_argument("dimension " + std::to_string(d) + " has length " +
                                  std::to_string(per_dim[d].size()) + ", expected " +
                                  std::to_string(length));
    }
    for (std::size_t t = 0; t < length; ++t) values[t * dims + d] = per_dim[d][t];
  }
  return MultivariateSeries(std::move(values), length, dims, label);
}

double Dataset::mean_length() const {
  if (series.empty()) return 0.0;
  double total = 0.0;
  for (const auto& s : series) total += static_cast<double>(s.length());
  return total / static_cast<double>(series.size());
}

std::size_t Dataset::min_length() const {
  std::size_t shortest = std::numeric_limits<std::size_t>::max();
  for (const auto& s : series) shortest = std::min(shortest, s.length());
  return series.empty() ? 0 : shortest;
}

std::vector<std::size_t> Dataset::class_counts() const {
  std::vector<std::size_t> counts(class_names.size(), 0);
  for (const auto& s : series) {
    if (s.label() && *s.label() < counts.size()) ++counts[*s.label()];
  }
  return counts;
}

}  // namespace miht
