#include "miht/hoeffding_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "miht/split_criterion.hpp"

namespace miht {
namespace {

std::size_t argmax(std::span<const double> v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

double sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

// log(sum(exp(terms))) without overflow.
double log_sum_exp(std::span<const double> terms) {
  const double top = *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (const double t : terms) acc += std::exp(t - top);
  return top + std::log(acc);
}

}  // namespace

std::vector<double> NodeStats::observed_class_weights() const {
  if (attributes.empty()) return std::vector<double>(class_weights.size(), 0.0);
  return attributes.front().class_weights();
}

double NodeStats::observed_weight() const {
  const auto w = observed_class_weights();
  return sum(w);
}

std::size_t NodeStats::majority_class() const {
  return class_weights.empty() ? 0 : argmax(class_weights);
}

std::vector<SplitCandidate> candidate_splits(const NodeStats& leaf) {
  const auto parent = leaf.observed_class_weights();
  const auto seen = std::count_if(parent.begin(), parent.end(), [](double w) { return w > 0.0; });
  if (seen < 2) return {};

  std::vector<SplitCandidate> out;
  const std::size_t n_classes = parent.size();
  std::vector<std::vector<double>> children(2, std::vector<double>(n_classes));
  for (std::size_t a = 0; a < leaf.attributes.size(); ++a) {
    const auto& obs = leaf.attributes[a];
    if (!(obs.max > obs.min)) continue;
    SplitCandidate best;
    best.gain = -1.0;
    for (std::size_t i = 0; i < kThresholdCandidates; ++i) {
      const double threshold = obs.min + (obs.max - obs.min) * static_cast<double>(i + 1) /
                                             static_cast<double>(kThresholdCandidates + 1);
      for (std::size_t c = 0; c < n_classes; ++c) {
        const auto [l, r] = obs.per_class[c].split_mass(threshold);
        children[0][c] = l;
        children[1][c] = r;
      }
      const double gain = info_gain(parent, children);
      if (gain > best.gain) {
        best.attribute = a;
        best.threshold = threshold;
        best.gain = gain;
        best.left_weights = children[0];
        best.right_weights = children[1];
      }
    }
    out.push_back(std::move(best));
  }
  out.push_back(SplitCandidate{});
  std::stable_sort(out.begin(), out.end(), [](const SplitCandidate& a, const SplitCandidate& b) {
    if (a.gain != b.gain) return a.gain > b.gain;
    return !a.attribute.has_value() && b.attribute.has_value();
  });
  return out;
}

std::vector<double> naive_bayes_posterior(const NodeStats& leaf, std::span<const double> x,
                                          NaiveBayesMode mode) {
  const std::size_t n_classes = leaf.class_weights.size();
  std::vector<double> probs(n_classes, 0.0);
  if (n_classes == 0) return probs;
  if (!(leaf.weight > 0.0)) {
    std::fill(probs.begin(), probs.end(), 1.0 / static_cast<double>(n_classes));
    return probs;
  }

  std::vector<double> log_joint(n_classes, -std::numeric_limits<double>::infinity());
  std::vector<double> terms(leaf.attributes.size());
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (!(leaf.class_weights[c] > 0.0)) continue;
    double log_likelihood = 0.0;
    if (!leaf.attributes.empty()) {
      for (std::size_t a = 0; a < leaf.attributes.size(); ++a) {
        terms[a] = leaf.attributes[a].per_class[c].log_density(x[a]);
      }
      log_likelihood = mode == NaiveBayesMode::kProduct
                           ? std::accumulate(terms.begin(), terms.end(), 0.0)
                           : log_sum_exp(terms);
    }
    log_joint[c] = std::log(leaf.class_weights[c] / leaf.weight) + log_likelihood;
  }
  const double top = *std::max_element(log_joint.begin(), log_joint.end());
  double norm = 0.0;
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (leaf.class_weights[c] > 0.0) {
      probs[c] = std::exp(log_joint[c] - top);
      norm += probs[c];
    }
  }
  for (auto& p : probs) p /= norm;
  return probs;
}

HoeffdingTree::HoeffdingTree(TreeOptions options) : options_(std::move(options)) {
  if (options_.n_classes == 0) throw std::invalid_argument("tree needs at least one class");
  if (options_.n_attributes == 0) throw std::invalid_argument("tree needs at least one attribute");
  if (!(options_.delta > 0.0 && options_.delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }
  if (options_.grace_period == 0) throw std::invalid_argument("grace period must be positive");
  if (options_.tie_threshold && !(*options_.tie_threshold >= 0.0)) {
    throw std::invalid_argument("tie threshold must be non-negative");
  }
  TreeNode root;
  root.stats = fresh_leaf_stats(std::vector<double>(options_.n_classes, 0.0));
  nodes_.push_back(std::move(root));
}

HoeffdingTree HoeffdingTree::from_nodes(TreeOptions options, std::vector<TreeNode> nodes) {
  HoeffdingTree tree(std::move(options));
  if (nodes.empty()) throw std::invalid_argument("node table is empty");
  const auto& opts = tree.options_;
  std::vector<int> parents(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (node.stats.class_weights.size() != opts.n_classes) {
      throw std::invalid_argument("node " + std::to_string(i) + " has wrong class count");
    }
    if (node.is_leaf()) {
      if (node.stats.attributes.size() != opts.n_attributes) {
        throw std::invalid_argument("leaf " + std::to_string(i) + " has wrong attribute count");
      }
      for (const auto& obs : node.stats.attributes) {
        if (obs.per_class.size() != opts.n_classes) {
          throw std::invalid_argument("leaf " + std::to_string(i) + " observer has wrong class count");
        }
      }
      continue;
    }
    if (node.split->attribute >= opts.n_attributes) {
      throw std::invalid_argument("split " + std::to_string(i) + " uses an unknown attribute");
    }
    for (const std::size_t child : {node.left, node.right}) {
      // Children always come after their parent, which rules out cycles.
      if (child <= i || child >= nodes.size()) {
        throw std::invalid_argument("split " + std::to_string(i) + " has an invalid child index");
      }
      ++parents[child];
    }
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (parents[i] != 1) {
      throw std::invalid_argument("node " + std::to_string(i) + " is not referenced exactly once");
    }
  }
  tree.nodes_ = std::move(nodes);
  return tree;
}

NodeStats HoeffdingTree::fresh_leaf_stats(std::vector<double> class_weights) const {
  NodeStats stats;
  stats.weight = sum(class_weights);
  stats.class_weights = std::move(class_weights);
  stats.attributes.assign(options_.n_attributes, AttributeObserver(options_.n_classes));
  return stats;
}

void HoeffdingTree::check_instance(std::span<const double> x) const {
  if (x.size() != options_.n_attributes) {
    throw std::invalid_argument("instance has " + std::to_string(x.size()) +
                                " attributes, tree expects " +
                                std::to_string(options_.n_attributes));
  }
}

std::size_t HoeffdingTree::leaf_index(std::span<const double> x) const {
  check_instance(x);
  std::size_t idx = 0;
  while (!nodes_[idx].is_leaf()) {
    const auto& node = nodes_[idx];
    idx = node.split->goes_left(x) ? node.left : node.right;
  }
  return idx;
}

std::vector<std::size_t> HoeffdingTree::path(std::span<const double> x) const {
  check_instance(x);
  std::vector<std::size_t> out{0};
  while (!nodes_[out.back()].is_leaf()) {
    const auto& node = nodes_[out.back()];
    out.push_back(node.split->goes_left(x) ? node.left : node.right);
  }
  return out;
}

void HoeffdingTree::learn(std::span<const double> x, std::size_t cls, double weight) {
  check_instance(x);
  if (cls >= options_.n_classes) {
    throw std::invalid_argument("class index " + std::to_string(cls) + " out of range");
  }
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw std::invalid_argument("instance weight must be positive and finite");
  }
  std::size_t idx = 0;
  while (!nodes_[idx].is_leaf()) {
    auto& node = nodes_[idx];
    node.stats.weight += weight;
    node.stats.class_weights[cls] += weight;
    idx = node.split->goes_left(x) ? node.left : node.right;
  }
  learn_at_leaf(idx, x, cls, weight);
}

void HoeffdingTree::learn_at_leaf(std::size_t leaf, std::span<const double> x, std::size_t cls,
                                  double weight) {
  auto& stats = nodes_[leaf].stats;
  // Score both prediction rules on the instance before it is absorbed.
  if (!(stats.weight > 0.0) || stats.majority_class() == cls) stats.mc_correct += weight;
  const auto nb = naive_bayes_posterior(stats, x, options_.nb_mode);
  if (argmax(nb) == cls) stats.nb_correct += weight;

  stats.weight += weight;
  stats.class_weights[cls] += weight;
  for (std::size_t a = 0; a < x.size(); ++a) stats.attributes[a].observe(x[a], cls, weight);
  stats.seen_since_split_attempt += weight;

  if (stats.seen_since_split_attempt >= static_cast<double>(options_.grace_period)) {
    stats.seen_since_split_attempt = 0.0;
    attempt_split(leaf);
  }
}

void HoeffdingTree::attempt_split(std::size_t leaf) {
  auto candidates = candidate_splits(nodes_[leaf].stats);
  if (candidates.size() < 2) return;
  ++split_attempts_;
  const auto& best = candidates[0];
  if (!best.attribute) return;
  const auto& runner_up = candidates[1];

  const double epsilon = hoeffding_bound(info_gain_range(options_.n_classes), options_.delta,
                                         std::max(1.0, nodes_[leaf].stats.observed_weight()));
  const bool separated = best.gain - runner_up.gain > epsilon;
  const bool tied = options_.tie_threshold && epsilon < *options_.tie_threshold;
  if (!separated && !tied) return;

  TreeNode left;
  left.stats = fresh_leaf_stats(best.left_weights);
  TreeNode right;
  right.stats = fresh_leaf_stats(best.right_weights);

  auto& node = nodes_[leaf];
  node.split = SplitCondition{SplitKind::kNumeric, *best.attribute, best.threshold};
  node.left = nodes_.size();
  node.right = nodes_.size() + 1;
  node.stats.attributes.clear();
  node.stats.attributes.shrink_to_fit();
  node.stats.seen_since_split_attempt = 0.0;
  node.stats.nb_correct = 0.0;
  node.stats.mc_correct = 0.0;
  nodes_.push_back(std::move(left));
  nodes_.push_back(std::move(right));
}

std::vector<double> HoeffdingTree::leaf_likelihood(std::span<const double> x) const {
  return naive_bayes_posterior(nodes_[leaf_index(x)].stats, x, options_.nb_mode);
}

Classification HoeffdingTree::classify(std::span<const double> x) const {
  const auto& stats = nodes_[leaf_index(x)].stats;
  Classification out;
  out.probabilities = naive_bayes_posterior(stats, x, options_.nb_mode);
  const bool use_nb = stats.nb_correct >= stats.mc_correct || !(stats.weight > 0.0);
  out.label = use_nb ? argmax(out.probabilities) : stats.majority_class();
  return out;
}

std::size_t HoeffdingTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

std::size_t HoeffdingTree::depth() const {
  std::size_t deepest = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [idx, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    if (!nodes_[idx].is_leaf()) {
      stack.emplace_back(nodes_[idx].left, d + 1);
      stack.emplace_back(nodes_[idx].right, d + 1);
    }
  }
  return deepest;
}

}  // namespace miht
