#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "miht/model.hpp"
#include "miht/series.hpp"

namespace miht {

struct EvalResult {
  double accuracy = 0.0;
  /// Mean recall over classes that occur in the ground truth.
  double balanced_accuracy = 0.0;
  /// Fraction of misclassified series.
  double hamming_loss = 0.0;
  /// Unweighted mean F1 over all classes; a class with no true and no
  /// predicted members scores 0.
  double macro_f1 = 0.0;
  double micro_f1 = 0.0;
  std::size_t correct = 0;
  std::size_t total = 0;
  /// confusion[truth][predicted]
  std::vector<std::vector<std::size_t>> confusion;
};

/// Throws std::invalid_argument on length mismatch, empty input, or a label
/// outside [0, n_classes).
EvalResult evaluate_predictions(std::span<const std::size_t> truth,
                                std::span<const std::size_t> predicted, std::size_t n_classes);

/// Predicts every series of `test` and scores it. Throws Error when the test
/// set's class names differ from the model's or a series is unlabeled.
EvalResult evaluate(const TrainedModel& model, const Dataset& test);

/// Ground-truth labels of a labeled dataset.
std::vector<std::size_t> labels_of(const Dataset& dataset);

}  // namespace miht
