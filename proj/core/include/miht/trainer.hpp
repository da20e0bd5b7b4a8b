#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "miht/bagging.hpp"
#include "miht/config.hpp"
#include "miht/model.hpp"
#include "miht/run_control.hpp"
#include "miht/series.hpp"

namespace miht {

/// Chosen window of k consecutive instances within one bag.
struct TauChoice {
  std::size_t start = 0;
  std::size_t length = 0;  ///< min(k, bag size)
  double objective = 0.0;  ///< summed likelihood over the window

  friend bool operator==(const TauChoice&, const TauChoice&) = default;
};

/// Start maximizing the sum of `likelihoods` over [start, start + min(k, n)),
/// smallest start on ties. Throws std::invalid_argument for k == 0 or empty input.
TauChoice select_tau(std::span<const double> likelihoods, std::size_t k);

/// Per-instance likelihood of `target` at the leaf each instance reaches.
std::vector<double> class_likelihoods(const HoeffdingTree& tree, const Bag& bag, std::size_t target);

TauChoice select_tau(const HoeffdingTree& tree, const Bag& bag, std::size_t target, std::size_t k);

struct FitReport {
  std::size_t iterations = 0;
  std::vector<std::size_t> tau_changes;  ///< one entry per iteration
  bool converged = false;
  std::size_t initial_instances = 0;
  std::size_t reinforcement_instances = 0;
  std::vector<TauChoice> final_tau;      ///< last selection per bag, empty if no iterations

  friend bool operator==(const FitReport&, const FitReport&) = default;
};

struct FitResult {
  TrainedModel model;
  FitReport report;
};

/// Trains MIHT: one pass over every instance of every bag in dataset order,
/// then up to `max_iterations` rounds that select tau for every bag against
/// the frozen tree and feed only those instances back. Stops early, before
/// feeding, once no bag's tau start changes.
///
/// Throws ConfigError for an empty or single-class training set and for
/// unlabeled series.
FitResult fit(const Dataset& train, const TrainConfig& config, const RunControl& control = {});

}  // namespace miht
