#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "miht/config.hpp"
#include "miht/gaussian_estimator.hpp"

namespace miht {

struct TreeOptions {
  std::size_t n_classes = 2;
  std::size_t n_attributes = 2;
  double delta = 0.005615;
  std::size_t grace_period = 200;
  std::optional<double> tie_threshold;
  NaiveBayesMode nb_mode = NaiveBayesMode::kProduct;

  friend bool operator==(const TreeOptions&, const TreeOptions&) = default;
};

/// Streaming statistics of one node. Split nodes only keep the class weights;
/// leaves also carry one observer per attribute and the counters that drive
/// split attempts and the adaptive prediction rule.
struct NodeStats {
  double weight = 0.0;                ///< W
  std::vector<double> class_weights;  ///< W_c, sums to W
  std::vector<AttributeObserver> attributes;
  double seen_since_split_attempt = 0.0;
  double nb_correct = 0.0;
  double mc_correct = 0.0;

  /// Class weights observed by the attribute observers, i.e. since the leaf
  /// was created. Differs from class_weights by the inherited distribution.
  std::vector<double> observed_class_weights() const;
  double observed_weight() const;
  std::size_t majority_class() const;

  friend bool operator==(const NodeStats&, const NodeStats&) = default;
};

enum class SplitKind { kNumeric, kCategorical };

struct SplitCondition {
  SplitKind kind = SplitKind::kNumeric;
  std::size_t attribute = 0;
  double threshold = 0.0;

  /// Numeric: x <= threshold goes left. Categorical: x == threshold goes left.
  bool goes_left(std::span<const double> x) const {
    const double v = x[attribute];
    return kind == SplitKind::kNumeric ? v <= threshold : v == threshold;
  }

  friend bool operator==(const SplitCondition&, const SplitCondition&) = default;
};

struct TreeNode {
  NodeStats stats;
  std::optional<SplitCondition> split;
  std::size_t left = 0;
  std::size_t right = 0;

  bool is_leaf() const noexcept { return !split.has_value(); }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// A split proposal. `attribute == nullopt` is the "do not split" candidate.
struct SplitCandidate {
  std::optional<std::size_t> attribute;
  double threshold = 0.0;
  double gain = 0.0;
  std::vector<double> left_weights;
  std::vector<double> right_weights;
};

/// Number of equally spaced thresholds tried per attribute.
inline constexpr std::size_t kThresholdCandidates = 10;

/// Best threshold per attribute plus the null split, sorted by gain
/// (descending; the null split wins ties). Empty when fewer than two classes
/// have been observed at the leaf.
std::vector<SplitCandidate> candidate_splits(const NodeStats& leaf);

/// Naive-Bayes class posterior at a leaf with leaf-local priors W_c / W.
/// Uniform for a leaf that has seen nothing.
std::vector<double> naive_bayes_posterior(const NodeStats& leaf, std::span<const double> x,
                                          NaiveBayesMode mode);

struct Classification {
  std::size_t label = 0;
  std::vector<double> probabilities;
};

/// Incremental (Hoeffding) decision tree over numeric attributes with
/// Gaussian attribute observers and adaptive naive-Bayes leaves.
///
/// Nodes live in one vector; node 0 is the root. Learning is single-writer;
/// const member functions may be called concurrently.
class HoeffdingTree {
 public:
  /// Throws std::invalid_argument for n_classes < 1, n_attributes < 1,
  /// delta outside (0, 1) or a zero grace period.
  explicit HoeffdingTree(TreeOptions options);

  /// Rebuilds a tree from its node table; throws std::invalid_argument when
  /// the table is not a well-formed binary tree rooted at node 0.
  static HoeffdingTree from_nodes(TreeOptions options, std::vector<TreeNode> nodes);

  /// Routes `x` to a leaf updating W and W_c on every node of the path, then
  /// updates the leaf observers and attempts a split every grace period.
  void learn(std::span<const double> x, std::size_t cls, double weight = 1.0);

  /// Posterior at the leaf `x` reaches.
  std::vector<double> leaf_likelihood(std::span<const double> x) const;

  /// Naive-Bayes argmax when the leaf's NB has been at least as accurate as
  /// its majority class so far, otherwise the majority class. Ties go to the
  /// lowest class index.
  Classification classify(std::span<const double> x) const;

  std::size_t leaf_index(std::span<const double> x) const;
  std::vector<std::size_t> path(std::span<const double> x) const;

  const TreeOptions& options() const noexcept { return options_; }
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const;
  std::size_t depth() const;
  std::size_t split_attempts() const noexcept { return split_attempts_; }

  friend bool operator==(const HoeffdingTree& a, const HoeffdingTree& b) {
    return a.options_ == b.options_ && a.nodes_ == b.nodes_;
  }

 private:
  void check_instance(std::span<const double> x) const;
  NodeStats fresh_leaf_stats(std::vector<double> class_weights) const;
  void learn_at_leaf(std::size_t leaf, std::span<const double> x, std::size_t cls, double weight);
  void attempt_split(std::size_t leaf);

  TreeOptions options_;
  std::vector<TreeNode> nodes_;
  std::size_t split_attempts_ = 0;
};

}  // namespace miht
