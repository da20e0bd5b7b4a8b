#include "miht/trainer.hpp"

#include <algorithm>
#include <stdexcept>

#include "miht/error.hpp"

namespace miht {

TauChoice select_tau(std::span<const double> likelihoods, std::size_t k) {
  if (k == 0) throw std::invalid_argument("select_tau: k must be positive");
  if (likelihoods.empty()) throw std::invalid_argument("select_tau: empty bag");
  const std::size_t width = std::min(k, likelihoods.size());

  const auto window_sum = [&](std::size_t start) {
    double total = 0.0;
    for (std::size_t j = start; j < start + width; ++j) total += likelihoods[j];
    return total;
  };
  TauChoice best{0, width, window_sum(0)};
  for (std::size_t start = 1; start + width <= likelihoods.size(); ++start) {
    const double total = window_sum(start);
    if (total > best.objective) best = {start, width, total};
  }
  return best;
}

std::vector<double> class_likelihoods(const HoeffdingTree& tree, const Bag& bag, std::size_t target) {
  std::vector<double> out;
  out.reserve(bag.size());
  for (const auto& inst : bag.instances) out.push_back(tree.leaf_likelihood(inst.attributes)[target]);
  return out;
}

TauChoice select_tau(const HoeffdingTree& tree, const Bag& bag, std::size_t target, std::size_t k) {
  return select_tau(class_likelihoods(tree, bag, target), k);
}

FitResult fit(const Dataset& train, const TrainConfig& config, const RunControl& control) {
  control.check("training setup");
  if (train.empty()) throw ConfigError("training set is empty");
  for (const auto& s : train.series) {
    if (!s.label() || *s.label() >= train.n_classes()) {
      throw ConfigError("every training series needs a valid class label");
    }
  }
  const auto counts = train.class_counts();
  if (std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; }) < 2) {
    throw ConfigError("training set must contain at least two classes");
  }
  if (!(config.delta > 0.0 && config.delta < 1.0)) throw ConfigError("delta must be in (0, 1)");
  if (config.tie_threshold && !(*config.tie_threshold >= 0.0)) {
    throw ConfigError("tie threshold must be non-negative");
  }

  const ResolvedParams params = resolve_params(train, config);
  const auto bags = build_bags(train, params);

  TreeOptions options;
  options.n_classes = train.n_classes();
  options.n_attributes = train.dims() * params.window;
  options.delta = config.delta;
  options.grace_period = params.grace_period;
  options.tie_threshold = config.tie_threshold;
  options.nb_mode = config.nb_mode;

  FitResult result{TrainedModel{HoeffdingTree(options), params, train.class_names, train.dims()}, {}};
  auto& tree = result.model.tree;
  auto& report = result.report;

  for (const auto& bag : bags) {
    for (const auto& inst : bag.instances) tree.learn(inst.attributes, *bag.label);
    report.initial_instances += bag.size();
    control.check("initial pass");
  }

  std::vector<TauChoice> tau;
  for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
    control.check("reinforcement");
    std::vector<TauChoice> next;
    next.reserve(bags.size());
    for (const auto& bag : bags) next.push_back(select_tau(tree, bag, *bag.label, params.k));

    std::size_t changed = 0;
    for (std::size_t b = 0; b < bags.size(); ++b) {
      if (tau.empty() || tau[b].start != next[b].start) ++changed;
    }
    tau = std::move(next);
    ++report.iterations;
    report.tau_changes.push_back(changed);
    if (changed == 0) {
      report.converged = true;
      break;
    }

    for (std::size_t b = 0; b < bags.size(); ++b) {
      const auto& bag = bags[b];
      for (std::size_t j = tau[b].start; j < tau[b].start + tau[b].length; ++j) {
        tree.learn(bag.instances[j].attributes, *bag.label);
      }
      report.reinforcement_instances += tau[b].length;
    }
  }
  report.final_tau = std::move(tau);
  return result;
}

}  // namespace miht
