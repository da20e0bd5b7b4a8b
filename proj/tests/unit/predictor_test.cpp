#include "miht/predictor.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "miht/trainer.hpp"
#include "support/planted.hpp"

namespace miht {
namespace {

using testing::make_planted;
using testing::PlantedSpec;

TEST(ModeVote, StrictMajority) {
  const std::vector<std::size_t> labels{0, 0, 1};
  const std::vector<std::vector<double>> probs{{0.9, 0.1}, {0.6, 0.4}, {0.2, 0.8}};
  const auto vote = mode_vote(labels, probs, 2);
  EXPECT_EQ(vote.label, 0u);
  EXPECT_FALSE(vote.tie_broken_by_probability);
}

TEST(ModeVote, TieBrokenBySummedProbability) {
  const std::vector<std::size_t> labels{0, 1};
  // summed: class 0 = 1.3, class 1 = 0.7
  const std::vector<std::vector<double>> a{{0.9, 0.1}, {0.4, 0.6}};
  auto vote = mode_vote(labels, a, 2);
  EXPECT_EQ(vote.label, 0u);
  EXPECT_TRUE(vote.tie_broken_by_probability);

  const std::vector<std::vector<double>> b{{0.55, 0.45}, {0.1, 0.9}};
  EXPECT_EQ(mode_vote(labels, b, 2).label, 1u);

  const std::vector<std::vector<double>> even{{0.5, 0.5}, {0.5, 0.5}};
  EXPECT_EQ(mode_vote(labels, even, 2).label, 0u);
}

TEST(ModeVote, SingleInstance) {
  const std::vector<std::size_t> labels{2};
  const std::vector<std::vector<double>> probs{{0.2, 0.3, 0.5}};
  EXPECT_EQ(mode_vote(labels, probs, 3).label, 2u);
}

TEST(InstanceSteps, SpanArithmetic) {
  const ResolvedParams params{21, 2, 4, 10};
  EXPECT_EQ(instance_steps(10, 4, params, 100), (StepSpan{20, 47}));
  EXPECT_EQ(instance_steps(0, 1, params, 100), (StepSpan{0, 21}));
  EXPECT_EQ(instance_steps(38, 2, params, 100), (StepSpan{76, 99}));
  EXPECT_EQ(instance_steps(0, 1, params, 10), (StepSpan{0, 10}));
}

TEST(InstanceSteps, MatchesBagCoverage) {
  for (std::size_t window : {2u, 5u, 21u}) {
    for (std::size_t stride = 1; stride <= window; stride += 2) {
      const ResolvedParams params{window, stride, 3, 1};
      const std::size_t length = 60;
      const std::size_t n = bag_size(length, window, stride);
      for (std::size_t first = 0; first < n; ++first) {
        for (std::size_t count = 1; first + count <= n; ++count) {
          // union of the covered windows is contiguous because stride <= window
          const std::size_t last_end = (first + count - 1) * stride + window;
          const auto span = instance_steps(first, count, params, length);
          ASSERT_EQ(span.begin, first * stride);
          ASSERT_EQ(span.end, std::min(last_end, length));
        }
      }
    }
  }
}

class TrainedPlanted : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    train_ = new Dataset(make_planted(PlantedSpec{.n_series = 120, .seed = 31}));
    model_ = new TrainedModel(fit(*train_, TrainConfig{}).model);
  }
  static void TearDownTestSuite() {
    delete model_;
    delete train_;
  }
  static Dataset* train_;
  static TrainedModel* model_;
};
Dataset* TrainedPlanted::train_ = nullptr;
TrainedModel* TrainedPlanted::model_ = nullptr;

TEST_F(TrainedPlanted, PredictIsPureAndConsistent) {
  const auto test = make_planted(PlantedSpec{.n_series = 30, .seed = 32});
  for (const auto& s : test.series) {
    const auto a = predict(*model_, s);
    const auto b = predict(*model_, s);
    EXPECT_EQ(a.label, b.label);
    EXPECT_EQ(a.instance_labels, b.instance_labels);
    EXPECT_EQ(a.instance_probabilities, b.instance_probabilities);
    ASSERT_EQ(a.instance_labels.size(), build_bag(s, model_->params).size());
    const bool among = std::find(a.instance_labels.begin(), a.instance_labels.end(), a.label) !=
                       a.instance_labels.end();
    EXPECT_TRUE(among || a.tie_broken_by_probability);
  }
}

TEST_F(TrainedPlanted, ExplanationSpanIsWellFormed) {
  const auto test = make_planted(PlantedSpec{.n_series = 30, .seed = 33});
  for (const auto& s : test.series) {
    const auto e = explain(*model_, s);
    EXPECT_EQ(e.label, predict(*model_, s).label);
    EXPECT_EQ(e.tau_length, std::min<std::size_t>(model_->params.k, e.likelihoods.size()));
    EXPECT_EQ(e.steps, instance_steps(e.tau_start, e.tau_length, model_->params, s.length()));
    EXPECT_LT(e.steps.begin, e.steps.end);
    EXPECT_LE(e.steps.end, s.length());
  }
}

TEST_F(TrainedPlanted, DimensionMismatchRejected) {
  const MultivariateSeries wrong(std::vector<double>(100 * 3, 0.0), 100, 3, 0);
  EXPECT_THROW(predict(*model_, wrong), std::invalid_argument);
  EXPECT_THROW(explain(*model_, wrong), std::invalid_argument);
}

TEST_F(TrainedPlanted, HandlesUnseenLengths) {
  const auto shorter = make_planted(PlantedSpec{.n_series = 2, .length = 10, .seed = 34});
  const auto longer = make_planted(PlantedSpec{.n_series = 2, .length = 300, .seed = 35});
  EXPECT_EQ(predict(*model_, shorter.series[0]).instance_labels.size(), 1u);
  EXPECT_EQ(predict(*model_, longer.series[0]).instance_labels.size(), bag_size(300, 21, 2));
}

}  // namespace
}  // namespace miht
