#include "miht/model_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "miht/error.hpp"
#include "miht/metrics.hpp"
#include "miht/predictor.hpp"
#include "miht/trainer.hpp"
#include "miht/ts_format.hpp"
#include "support/planted.hpp"

namespace miht {
namespace {

TrainedModel round_trip(const TrainedModel& model) {
  std::stringstream buffer;
  save_model(model, buffer);
  return load_model(buffer);
}

TEST(ModelIo, SingleLeafRoundTrip) {
  TreeOptions options;
  options.n_classes = 3;
  options.n_attributes = 4;
  options.grace_period = 1000;
  TrainedModel model{HoeffdingTree(options), ResolvedParams{2, 1, 4, 1000}, {"x", "y", "z"}, 2};
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.0, 1e3);
  std::vector<std::vector<double>> probes;
  for (int i = 0; i < 100; ++i) {
    std::vector<double> x(4);
    for (auto& v : x) v = noise(rng);
    model.tree.learn(x, static_cast<std::size_t>(i % 3), 0.1 + i * 0.37);
    probes.push_back(x);
  }
  const auto loaded = round_trip(model);
  EXPECT_EQ(loaded.tree, model.tree);
  EXPECT_EQ(loaded.params, model.params);
  EXPECT_EQ(loaded.class_names, model.class_names);
  EXPECT_EQ(loaded.dims, 2u);
  for (const auto& x : probes) {
    const auto a = model.tree.classify(x);
    const auto b = loaded.tree.classify(x);
    EXPECT_EQ(a.label, b.label);
    EXPECT_EQ(a.probabilities, b.probabilities);
  }
}

TEST(ModelIo, TrainedModelPredictsIdentically) {
  const auto train = testing::make_planted(testing::PlantedSpec{.n_series = 100, .seed = 41});
  const auto test = testing::make_planted(testing::PlantedSpec{.n_series = 60, .seed = 42});
  TrainConfig config;
  config.tie_threshold = 0.05;
  const auto model = fit(train, config).model;
  ASSERT_GT(model.tree.node_count(), 1u);
  const auto loaded = round_trip(model);
  EXPECT_EQ(loaded.tree, model.tree);
  for (const auto& s : test.series) {
    const auto a = predict(model, s);
    const auto b = predict(loaded, s);
    ASSERT_EQ(a.label, b.label);
    ASSERT_EQ(a.instance_probabilities, b.instance_probabilities);
  }

  std::stringstream first, second;
  save_model(model, first);
  save_model(loaded, second);
  EXPECT_EQ(first.str(), second.str());
}

TEST(ModelIo, JapaneseVowelsFileRoundTrip) {
  const std::filesystem::path dir = std::filesystem::path(MIHT_DATA_DIR) / "JapaneseVowels";
  if (!std::filesystem::exists(dir / "JapaneseVowels_TRAIN.ts")) GTEST_SKIP() << "dataset missing";
  const auto train = read_ts_file(dir / "JapaneseVowels_TRAIN.ts");
  const auto test = read_ts_file(dir / "JapaneseVowels_TEST.ts");
  TrainConfig config;
  config.max_iterations = 3;
  const auto model = fit(train, config).model;
  const auto path = std::filesystem::temp_directory_path() / "miht_model_io_test.model";
  save_model_file(model, path);
  const auto loaded = load_model_file(path);
  std::filesystem::remove(path);
  EXPECT_EQ(predict_labels(model, test), predict_labels(loaded, test));
  EXPECT_EQ(evaluate(model, test).accuracy, evaluate(loaded, test).accuracy);
}

TEST(ModelIo, RejectsBadFiles) {
  TreeOptions options;
  TrainedModel model{HoeffdingTree(options), ResolvedParams{}, {"a", "b"}, 1};
  std::stringstream buffer;
  save_model(model, buffer);
  const std::string text = buffer.str();

  std::string wrong_version = text;
  wrong_version.replace(0, std::string("miht-model 1").size(), "miht-model 9");
  std::istringstream v(wrong_version);
  EXPECT_THROW(load_model(v), ModelFormatError);

  std::istringstream truncated(text.substr(0, text.size() / 2));
  EXPECT_THROW(load_model(truncated), ModelFormatError);

  std::istringstream garbage("not a model\n");
  EXPECT_THROW(load_model(garbage), ModelFormatError);

  std::istringstream empty("");
  EXPECT_THROW(load_model(empty), ModelFormatError);

  EXPECT_THROW(load_model_file("/nonexistent/miht.model"), Error);

  TrainedModel spaced{HoeffdingTree(options), ResolvedParams{}, {"a b", "c"}, 1};
  std::stringstream sink;
  EXPECT_THROW(save_model(spaced, sink), std::invalid_argument);
}

}  // namespace
}  // namespace miht
