#include "miht/split_criterion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace miht {

double hoeffding_bound(double range, double delta, double n) {
  if (!(range > 0.0)) throw std::invalid_argument("Hoeffding bound: range must be positive");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("Hoeffding bound: delta must be in (0, 1]");
  if (!(n >= 1.0)) throw std::invalid_argument("Hoeffding bound: n must be at least 1");
  return std::sqrt(range * range * std::log(1.0 / delta) / (2.0 * n));
}

double info_gain_range(std::size_t n_classes) {
  return std::log2(static_cast<double>(std::max<std::size_t>(2, n_classes)));
}

double entropy(std::span<const double> class_weights) {
  const double total = std::accumulate(class_weights.begin(), class_weights.end(), 0.0);
  if (!(total > 0.0)) return 0.0;
  double h = 0.0;
  for (const double w : class_weights) {
    if (w > 0.0) {
      const double p = w / total;
      h -= p * std::log2(p);
    }
  }
  return std::max(0.0, h);
}

double info_gain(std::span<const double> parent, std::span<const std::vector<double>> children) {
  const double total = std::accumulate(parent.begin(), parent.end(), 0.0);
  if (!(total > 0.0)) return 0.0;
  double child_entropy = 0.0;
  for (const auto& child : children) {
    const double w = std::accumulate(child.begin(), child.end(), 0.0);
    if (w > 0.0) child_entropy += (w / total) * entropy(child);
  }
  return std::max(0.0, entropy(parent) - child_entropy);
}

}  // namespace miht
