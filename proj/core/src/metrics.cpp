#include "miht/metrics.hpp"

#include <stdexcept>

#include "miht/error.hpp"
#include "miht/predictor.hpp"

namespace miht {

EvalResult evaluate_predictions(std::span<const std::size_t> truth,
                                std::span<const std::size_t> predicted, std::size_t n_classes) {
  if (truth.size() != predicted.size()) {
    throw std::invalid_argument("truth and prediction lengths differ");
  }
  if (truth.empty()) throw std::invalid_argument("cannot score an empty prediction set");
  EvalResult r;
  r.total = truth.size();
  r.confusion.assign(n_classes, std::vector<std::size_t>(n_classes, 0));
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] >= n_classes || predicted[i] >= n_classes) {
      throw std::invalid_argument("label outside the class range");
    }
    ++r.confusion[truth[i]][predicted[i]];
    if (truth[i] == predicted[i]) ++r.correct;
  }

  const double n = static_cast<double>(r.total);
  r.accuracy = static_cast<double>(r.correct) / n;
  r.hamming_loss = static_cast<double>(r.total - r.correct) / n;

  double recall_sum = 0.0;
  std::size_t present = 0;
  double f1_sum = 0.0;
  std::size_t tp_sum = 0, fp_sum = 0, fn_sum = 0;
  for (std::size_t c = 0; c < n_classes; ++c) {
    const std::size_t tp = r.confusion[c][c];
    std::size_t support = 0, predicted_c = 0;
    for (std::size_t o = 0; o < n_classes; ++o) {
      support += r.confusion[c][o];
      predicted_c += r.confusion[o][c];
    }
    const std::size_t fn = support - tp;
    const std::size_t fp = predicted_c - tp;
    tp_sum += tp;
    fp_sum += fp;
    fn_sum += fn;
    if (support > 0) {
      recall_sum += static_cast<double>(tp) / static_cast<double>(support);
      ++present;
    }
    // F1 = 2TP / (2TP + FP + FN), 0/0 := 0
    const std::size_t denom = 2 * tp + fp + fn;
    if (denom > 0) f1_sum += static_cast<double>(2 * tp) / static_cast<double>(denom);
  }
  r.balanced_accuracy = present > 0 ? recall_sum / static_cast<double>(present) : 0.0;
  r.macro_f1 = n_classes > 0 ? f1_sum / static_cast<double>(n_classes) : 0.0;
  r.micro_f1 = static_cast<double>(2 * tp_sum) / static_cast<double>(2 * tp_sum + fp_sum + fn_sum);
  return r;
}

std::vector<std::size_t> labels_of(const Dataset& dataset) {
  std::vector<std::size_t> out;
  out.reserve(dataset.size());
  for (const auto& s : dataset.series) {
    if (!s.label()) throw Error("series without a class label in a scored dataset");
    out.push_back(*s.label());
  }
  return out;
}

EvalResult evaluate(const TrainedModel& model, const Dataset& test) {
  if (test.class_names != model.class_names) {
    throw Error("test classes do not match the model's classes");
  }
  const auto truth = labels_of(test);
  const auto predicted = predict_labels(model, test);
  return evaluate_predictions(truth, predicted, model.n_classes());
}

}  // namespace miht
