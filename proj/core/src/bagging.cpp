#include "miht/bagging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "miht/error.hpp"

namespace miht {

std::size_t bag_size(std::size_t length, std::size_t window, std::size_t stride) {
  if (window == 0 || stride == 0) throw std::invalid_argument("window and stride must be positive");
  if (length < window) return 1;
  return (length - window) / stride + 1;
}

double mean_bag_size(double mean_length, std::size_t window, std::size_t stride) {
  if (window == 0 || stride == 0) throw std::invalid_argument("window and stride must be positive");
  const double w = static_cast<double>(window);
  if (mean_length < w) return 1.0;
  return std::floor((mean_length - w) / static_cast<double>(stride)) + 1.0;
}

ResolvedParams resolve_params(const Dataset& train, const TrainConfig& config) {
  if (train.empty()) throw ConfigError("training set is empty");
  const auto in_unit = [](double f) { return f > 0.0 && f <= 1.0; };
  if (!in_unit(config.window_fraction)) throw ConfigError("window fraction must be in (0, 1]");
  if (!in_unit(config.stride_fraction)) throw ConfigError("stride fraction must be in (0, 1]");
  if (!(config.grace_fraction > 0.0)) throw ConfigError("grace fraction must be positive");
  if (config.k == 0) throw ConfigError("k must be at least 1");

  const double mean_length = train.mean_length();
  if (mean_length < 2.0) throw ConfigError("mean training length must be at least 2");

  ResolvedParams params;
  params.window = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::llround(config.window_fraction * mean_length)));
  params.stride = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::llround(config.stride_fraction * mean_length)), 1,
      params.window);
  params.k = config.k;
  const double bag = mean_bag_size(mean_length, params.window, params.stride);
  params.grace_period =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(config.grace_fraction * bag)));
  return params;
}

Bag build_bag(const MultivariateSeries& series, const ResolvedParams& params) {
  const std::size_t window = params.window;
  const std::size_t dims = series.dims();
  const std::size_t length = series.length();
  Bag bag;
  bag.label = series.label();
  bag.source_length = length;

  const std::size_t count = bag_size(length, window, params.stride);
  bag.instances.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t start = j * params.stride;
    Instance inst;
    inst.bag_index = j;
    inst.attributes.resize(dims * window);
    for (std::size_t d = 0; d < dims; ++d) {
      for (std::size_t t = 0; t < window; ++t) {
        const std::size_t step = std::min(start + t, length - 1);
        inst.attributes[attribute_index(d, t, window)] = series.at(step, d);
      }
    }
    bag.instances.push_back(std::move(inst));
  }
  return bag;
}

std::vector<Bag> build_bags(const Dataset& dataset, const ResolvedParams& params) {
  std::vector<Bag> bags;
  bags.reserve(dataset.size());
  for (const auto& s : dataset.series) bags.push_back(build_bag(s, params));
  return bags;
}

}  // namespace miht
