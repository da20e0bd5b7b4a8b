#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace miht {

/// How a leaf combines per-attribute Gaussian densities into p(instance | class).
enum class NaiveBayesMode {
  kProduct,  ///< Standard naive Bayes: product of densities (summed in log space).
  kSum,      ///< Sum of densities.
};

std::string_view to_string(NaiveBayesMode mode);
/// Accepts "product" or "sum"; throws std::invalid_argument otherwise.
NaiveBayesMode parse_nb_mode(std::string_view text);

/// Training hyperparameters.
struct TrainConfig {
  double window_fraction = 0.21;     ///< instance length, fraction of mean training length
  double stride_fraction = 0.02;     ///< step between window starts, same reference
  std::size_t k = 4;                 ///< consecutive instances selected per bag
  double grace_fraction = 3.665;     ///< split-attempt period, fraction of mean bag size
  double delta = 0.005615;           ///< Hoeffding bound significance
  std::size_t max_iterations = 100;  ///< cap on reinforcement iterations
  std::uint64_t seed = 0;            ///< recorded for reproducibility; training is deterministic
  NaiveBayesMode nb_mode = NaiveBayesMode::kProduct;
  std::optional<double> tie_threshold;  ///< split anyway once the bound drops below this
};

}  // namespace miht
