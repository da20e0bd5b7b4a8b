#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "miht/model.hpp"
#include "miht/series.hpp"

namespace miht {

struct PredictionReport {
  std::size_t label = 0;
  std::vector<std::size_t> instance_labels;
  std::vector<std::vector<double>> instance_probabilities;
  /// True when several classes shared the top vote count and the summed
  /// probability decided.
  bool tie_broken_by_probability = false;
};

/// Most frequent label; ties go to the larger summed probability across all
/// instances, then to the lowest class index.
struct ModeVote {
  std::size_t label = 0;
  bool tie_broken_by_probability = false;
};
ModeVote mode_vote(std::span<const std::size_t> labels,
                   std::span<const std::vector<double>> probabilities, std::size_t n_classes);

/// Half-open range of original time steps covered by `count` consecutive
/// instances starting at instance `first`, clipped to the series length.
struct StepSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const StepSpan&, const StepSpan&) = default;
};
StepSpan instance_steps(std::size_t first, std::size_t count, const ResolvedParams& params,
                        std::size_t series_length);

struct Explanation {
  std::size_t label = 0;
  std::size_t tau_start = 0;   ///< first selected instance
  std::size_t tau_length = 0;  ///< min(k, bag size)
  StepSpan steps;
  std::vector<double> likelihoods;  ///< per instance, for the predicted class
};

/// Classifies every window of `series` and aggregates by mode. Throws
/// std::invalid_argument when the series dimension count differs from the
/// model's.
PredictionReport predict(const TrainedModel& model, const MultivariateSeries& series);

/// predict(), then the k consecutive windows most likely under the predicted
/// class and the time steps they cover.
Explanation explain(const TrainedModel& model, const MultivariateSeries& series);

std::vector<std::size_t> predict_labels(const TrainedModel& model, const Dataset& dataset);

}  // namespace miht
