#include "miht/hoeffding_tree.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <stdexcept>

namespace miht {
namespace {

TreeOptions options(std::size_t n_classes, std::size_t n_attributes, std::size_t grace) {
  TreeOptions o;
  o.n_classes = n_classes;
  o.n_attributes = n_attributes;
  o.grace_period = grace;
  return o;
}

void expect_weights_consistent(const HoeffdingTree& tree) {
  for (const auto& node : tree.nodes()) {
    double total = 0.0;
    for (const double w : node.stats.class_weights) total += w;
    ASSERT_NEAR(node.stats.weight, total, 1e-9 * std::max(1.0, total));
  }
}

double normal_pdf(double x, double mean, double var) {
  return std::exp(-(x - mean) * (x - mean) / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

TEST(HoeffdingTree, SingleInstanceStaysLeaf) {
  HoeffdingTree tree(options(2, 3, 50));
  const std::vector<double> x{1, 2, 3};
  tree.learn(x, 1);
  ASSERT_EQ(tree.node_count(), 1u);
  const auto& stats = tree.nodes()[0].stats;
  EXPECT_EQ(stats.weight, 1.0);
  EXPECT_EQ(stats.class_weights, (std::vector<double>{0, 1}));
}

TEST(HoeffdingTree, RejectsBadInput) {
  EXPECT_THROW(HoeffdingTree(options(0, 1, 1)), std::invalid_argument);
  EXPECT_THROW(HoeffdingTree(options(2, 0, 1)), std::invalid_argument);
  EXPECT_THROW(HoeffdingTree(options(2, 1, 0)), std::invalid_argument);
  auto bad_delta = options(2, 1, 1);
  bad_delta.delta = 1.0;
  EXPECT_THROW(HoeffdingTree{bad_delta}, std::invalid_argument);

  HoeffdingTree tree(options(2, 2, 10));
  EXPECT_THROW(tree.learn(std::vector<double>{1.0}, 0), std::invalid_argument);
  EXPECT_THROW(tree.learn(std::vector<double>{1.0, 2.0}, 2), std::invalid_argument);
  EXPECT_THROW(tree.classify(std::vector<double>{1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST(HoeffdingTree, SplitsOnSeparatingAttribute) {
  constexpr std::size_t grace = 50;
  HoeffdingTree tree(options(2, 6, grace));
  std::mt19937_64 rng(17);
  std::normal_distribution<double> noise;
  for (std::size_t i = 0; i < 10 * grace; ++i) {
    const std::size_t cls = i % 2;
    std::vector<double> x(6);
    for (auto& v : x) v = noise(rng);
    x[3] += cls == 1 ? 10.0 : 0.0;
    tree.learn(x, cls);
  }
  const auto& root = tree.nodes()[0];
  ASSERT_FALSE(root.is_leaf());
  EXPECT_EQ(root.split->attribute, 3u);
  EXPECT_GT(root.split->threshold, 2.0);
  EXPECT_LT(root.split->threshold, 8.0);
  expect_weights_consistent(tree);
}

TEST(HoeffdingTree, PureStreamNeverSplits) {
  HoeffdingTree tree(options(3, 4, 20));
  std::mt19937_64 rng(2);
  std::normal_distribution<double> noise(0.0, 5.0);
  for (int i = 0; i < 5000; ++i) {
    std::vector<double> x(4);
    for (auto& v : x) v = noise(rng);
    tree.learn(x, 2);
  }
  EXPECT_EQ(tree.node_count(), 1u);
  const auto c = tree.classify(std::vector<double>{0, 0, 0, 0});
  EXPECT_EQ(c.label, 2u);
  EXPECT_EQ(c.probabilities, (std::vector<double>{0, 0, 1}));
}

TEST(HoeffdingTree, NoSplitBeforeGracePeriod) {
  constexpr std::size_t grace = 300;
  HoeffdingTree tree(options(2, 1, grace));
  for (std::size_t i = 0; i + 1 < grace; ++i) {
    tree.learn(std::vector<double>{i % 2 == 0 ? 0.0 : 100.0}, i % 2);
    ASSERT_EQ(tree.node_count(), 1u);
    ASSERT_EQ(tree.split_attempts(), 0u);
  }
  tree.learn(std::vector<double>{100.0}, 1);
  EXPECT_EQ(tree.split_attempts(), 1u);
  EXPECT_EQ(tree.node_count(), 3u);
}

TEST(HoeffdingTree, WeightsConsistentAfterRandomStreams) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n_classes = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    const std::size_t n_attr = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    HoeffdingTree tree(options(n_classes, n_attr, std::uniform_int_distribution<std::size_t>(5, 60)(rng)));
    std::normal_distribution<double> noise;
    std::uniform_real_distribution<double> weight(0.1, 3.0);
    for (int i = 0; i < 3000; ++i) {
      const std::size_t cls = std::uniform_int_distribution<std::size_t>(0, n_classes - 1)(rng);
      std::vector<double> x(n_attr);
      for (std::size_t a = 0; a < n_attr; ++a) x[a] = noise(rng) + (a == cls % n_attr ? 3.0 * cls : 0.0);
      tree.learn(x, cls, weight(rng));
    }
    expect_weights_consistent(tree);
    std::vector<double> probe(n_attr, 0.5);
    const auto p = tree.leaf_likelihood(probe);
    double sum = 0.0;
    for (const double v : p) sum += v;
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(CandidateSplits, SeparatedClassesGainPriorEntropy) {
  NodeStats leaf;
  leaf.class_weights = {30, 10};
  leaf.weight = 40;
  leaf.attributes.assign(2, AttributeObserver(2));
  std::mt19937_64 rng(4);
  std::normal_distribution<double> noise;
  for (int i = 0; i < 40; ++i) {
    const std::size_t cls = i < 30 ? 0 : 1;
    leaf.attributes[0].observe(noise(rng) + (cls == 1 ? 100.0 : 0.0), cls, 1.0);
    leaf.attributes[1].observe(noise(rng), cls, 1.0);
  }
  const auto candidates = candidate_splits(leaf);
  ASSERT_FALSE(candidates.empty());
  ASSERT_TRUE(candidates[0].attribute.has_value());
  EXPECT_EQ(*candidates[0].attribute, 0u);
  const double prior = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
  EXPECT_NEAR(candidates[0].gain, prior, 1e-3);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    EXPECT_LE(candidates[i].gain, candidates[i - 1].gain);
  }
}

TEST(CandidateSplits, SingleClassAndIdenticalClasses) {
  NodeStats pure;
  pure.class_weights = {5, 0};
  pure.weight = 5;
  pure.attributes.assign(1, AttributeObserver(2));
  for (int i = 0; i < 5; ++i) pure.attributes[0].observe(i, 0, 1.0);
  EXPECT_TRUE(candidate_splits(pure).empty());

  NodeStats same;
  same.class_weights = {20, 20};
  same.weight = 40;
  same.attributes.assign(1, AttributeObserver(2));
  for (int i = 0; i < 20; ++i) {
    same.attributes[0].observe(i, 0, 1.0);
    same.attributes[0].observe(i, 1, 1.0);
  }
  for (const auto& c : candidate_splits(same)) EXPECT_LT(c.gain, 1e-6);
}

TEST(NaiveBayes, MatchesClosedFormBayes) {
  NodeStats leaf;
  leaf.class_weights = {3, 2};
  leaf.weight = 5;
  leaf.attributes.assign(1, AttributeObserver(2));
  for (const double v : {1.0, 2.0, 3.0}) leaf.attributes[0].observe(v, 0, 1.0);
  for (const double v : {5.0, 7.0}) leaf.attributes[0].observe(v, 1, 1.0);
  // class 0: mean 2, sample variance 1; class 1: mean 6, sample variance 2
  for (const double x : {0.0, 2.5, 4.0, 4.4, 6.0, 9.0}) {
    const double a = 0.6 * normal_pdf(x, 2.0, 1.0);
    const double b = 0.4 * normal_pdf(x, 6.0, 2.0);
    const auto p = naive_bayes_posterior(leaf, std::vector<double>{x}, NaiveBayesMode::kProduct);
    EXPECT_NEAR(p[0], a / (a + b), 1e-9);
    EXPECT_NEAR(p[1], b / (a + b), 1e-9);
  }
}

TEST(NaiveBayes, SumModeAddsDensities) {
  NodeStats leaf;
  leaf.class_weights = {2, 2};
  leaf.weight = 4;
  leaf.attributes.assign(2, AttributeObserver(2));
  for (const double v : {0.0, 2.0}) {
    leaf.attributes[0].observe(v, 0, 1.0);
    leaf.attributes[1].observe(v + 10.0, 0, 1.0);
    leaf.attributes[0].observe(v + 3.0, 1, 1.0);
    leaf.attributes[1].observe(v + 1.0, 1, 1.0);
  }
  const std::vector<double> x{1.5, 4.0};
  const double a = normal_pdf(1.5, 1.0, 2.0) + normal_pdf(4.0, 11.0, 2.0);
  const double b = normal_pdf(1.5, 4.0, 2.0) + normal_pdf(4.0, 2.0, 2.0);
  const auto p = naive_bayes_posterior(leaf, x, NaiveBayesMode::kSum);
  EXPECT_NEAR(p[0], a / (a + b), 1e-9);
}

TEST(NaiveBayes, DegenerateLeaves) {
  NodeStats empty;
  empty.class_weights = {0, 0, 0};
  empty.attributes.assign(1, AttributeObserver(3));
  const auto u = naive_bayes_posterior(empty, std::vector<double>{1.0}, NaiveBayesMode::kProduct);
  for (const double p : u) EXPECT_DOUBLE_EQ(p, 1.0 / 3.0);

  NodeStats symmetric;
  symmetric.class_weights = {2, 2};
  symmetric.weight = 4;
  symmetric.attributes.assign(1, AttributeObserver(2));
  for (const double v : {1.0, 3.0}) {
    symmetric.attributes[0].observe(v, 0, 1.0);
    symmetric.attributes[0].observe(v, 1, 1.0);
  }
  const auto s = naive_bayes_posterior(symmetric, std::vector<double>{7.0}, NaiveBayesMode::kProduct);
  EXPECT_DOUBLE_EQ(s[0], 0.5);
  EXPECT_DOUBLE_EQ(s[1], 0.5);
}

TEST(Classify, EmptyModelIsUniformWithFirstClass) {
  HoeffdingTree tree(options(3, 2, 10));
  const auto c = tree.classify(std::vector<double>{0.0, 0.0});
  EXPECT_EQ(c.label, 0u);
  for (const double p : c.probabilities) EXPECT_DOUBLE_EQ(p, 1.0 / 3.0);
}

TEST(Classify, MajorityOverridesInaccurateNaiveBayes) {
  TreeNode leaf;
  leaf.stats.class_weights = {10, 2};
  leaf.stats.weight = 12;
  leaf.stats.attributes.assign(1, AttributeObserver(2));
  for (int i = 0; i < 10; ++i) leaf.stats.attributes[0].observe(i % 2, 0, 1.0);
  leaf.stats.attributes[0].observe(50.0, 1, 1.0);
  leaf.stats.attributes[0].observe(52.0, 1, 1.0);
  const std::vector<double> near_b{51.0};

  leaf.stats.nb_correct = 3;
  leaf.stats.mc_correct = 8;
  const auto majority = HoeffdingTree::from_nodes(options(2, 1, 100), {leaf});
  const auto c = majority.classify(near_b);
  EXPECT_GT(c.probabilities[1], 0.99);
  EXPECT_EQ(c.label, 0u);

  leaf.stats.nb_correct = 8;
  const auto bayes = HoeffdingTree::from_nodes(options(2, 1, 100), {leaf});
  EXPECT_EQ(bayes.classify(near_b).label, 1u);
}

TEST(Classify, FromNodesRejectsMalformedTables) {
  EXPECT_THROW(HoeffdingTree::from_nodes(options(2, 1, 10), {}), std::invalid_argument);
  TreeNode root;
  root.stats.class_weights = {0, 0};
  root.split = SplitCondition{SplitKind::kNumeric, 0, 1.0};
  root.left = 1;
  root.right = 5;
  TreeNode leaf;
  leaf.stats.class_weights = {0, 0};
  leaf.stats.attributes.assign(1, AttributeObserver(2));
  EXPECT_THROW(HoeffdingTree::from_nodes(options(2, 1, 10), {root, leaf, leaf}), std::invalid_argument);
}

TEST(Classify, ConcurrentReadsAgree) {
  HoeffdingTree tree(options(2, 3, 30));
  std::mt19937_64 rng(8);
  std::normal_distribution<double> noise;
  for (int i = 0; i < 2000; ++i) {
    const std::size_t cls = i % 2;
    tree.learn(std::vector<double>{noise(rng) + 4.0 * cls, noise(rng), noise(rng)}, cls);
  }
  std::vector<std::vector<double>> probes;
  for (int i = 0; i < 500; ++i) probes.push_back({noise(rng) * 3.0, noise(rng), noise(rng)});
  std::vector<std::size_t> serial;
  for (const auto& p : probes) serial.push_back(tree.classify(p).label);

  std::vector<std::future<std::vector<std::size_t>>> workers;
  for (int t = 0; t < 4; ++t) {
    workers.push_back(std::async(std::launch::async, [&] {
      std::vector<std::size_t> out;
      for (const auto& p : probes) out.push_back(tree.classify(p).label);
      return out;
    }));
  }
  for (auto& w : workers) EXPECT_EQ(w.get(), serial);
}

}  // namespace
}  // namespace miht
