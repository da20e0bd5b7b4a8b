#include "miht/predictor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "miht/trainer.hpp"

namespace miht {
namespace {

Bag checked_bag(const TrainedModel& model, const MultivariateSeries& series) {
  if (series.dims() != model.dims) {
    throw std::invalid_argument("series has " + std::to_string(series.dims()) +
                                " dimensions, model expects " + std::to_string(model.dims));
  }
  return build_bag(series, model.params);
}

}  // namespace

ModeVote mode_vote(std::span<const std::size_t> labels,
                   std::span<const std::vector<double>> probabilities, std::size_t n_classes) {
  std::vector<std::size_t> votes(n_classes, 0);
  for (const auto l : labels) ++votes.at(l);
  const auto top = *std::max_element(votes.begin(), votes.end());
  const auto tied = std::count(votes.begin(), votes.end(), top);
  if (tied == 1) {
    return {static_cast<std::size_t>(std::find(votes.begin(), votes.end(), top) - votes.begin()), false};
  }

  std::vector<double> mass(n_classes, 0.0);
  for (const auto& p : probabilities) {
    for (std::size_t c = 0; c < n_classes && c < p.size(); ++c) mass[c] += p[c];
  }
  std::size_t best = n_classes;
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (votes[c] != top) continue;
    if (best == n_classes || mass[c] > mass[best]) best = c;
  }
  return {best, true};
}

StepSpan instance_steps(std::size_t first, std::size_t count, const ResolvedParams& params,
                        std::size_t series_length) {
  const std::size_t begin = first * params.stride;
  const std::size_t extent = (count == 0 ? 0 : (count - 1) * params.stride) + params.window;
  return {std::min(begin, series_length), std::min(begin + extent, series_length)};
}

PredictionReport predict(const TrainedModel& model, const MultivariateSeries& series) {
  const Bag bag = checked_bag(model, series);
  PredictionReport report;
  report.instance_labels.reserve(bag.size());
  report.instance_probabilities.reserve(bag.size());
  for (const auto& inst : bag.instances) {
    auto c = model.tree.classify(inst.attributes);
    report.instance_labels.push_back(c.label);
    report.instance_probabilities.push_back(std::move(c.probabilities));
  }
  const auto vote = mode_vote(report.instance_labels, report.instance_probabilities,
                              model.tree.options().n_classes);
  report.label = vote.label;
  report.tie_broken_by_probability = vote.tie_broken_by_probability;
  return report;
}

Explanation explain(const TrainedModel& model, const MultivariateSeries& series) {
  const Bag bag = checked_bag(model, series);
  const auto report = predict(model, series);
  Explanation out;
  out.label = report.label;
  out.likelihoods = class_likelihoods(model.tree, bag, report.label);
  const auto tau = select_tau(out.likelihoods, model.params.k);
  out.tau_start = tau.start;
  out.tau_length = tau.length;
  out.steps = instance_steps(tau.start, tau.length, model.params, series.length());
  return out;
}

std::vector<std::size_t> predict_labels(const TrainedModel& model, const Dataset& dataset) {
  std::vector<std::size_t> out;
  out.reserve(dataset.size());
  for (const auto& s : dataset.series) out.push_back(predict(model, s).label);
  return out;
}

}  // namespace miht
