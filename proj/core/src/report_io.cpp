#include "miht/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace miht {
namespace {

using nlohmann::json;

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace

std::string fit_report_json(const FitReport& report, const TrainedModel& model,
                            const TrainConfig& config) {
  json j;
  j["resolved"] = {{"window_steps", model.params.window},
                   {"stride_steps", model.params.stride},
                   {"k", model.params.k},
                   {"grace_period", model.params.grace_period}};
  j["config"] = {{"window_fraction", config.window_fraction},
                 {"stride_fraction", config.stride_fraction},
                 {"k", config.k},
                 {"grace_fraction", config.grace_fraction},
                 {"delta", config.delta},
                 {"max_iterations", config.max_iterations},
                 {"seed", config.seed},
                 {"nb_mode", std::string(to_string(config.nb_mode))},
                 {"tie_threshold", config.tie_threshold ? json(*config.tie_threshold) : json(nullptr)}};
  j["iterations"] = report.iterations;
  j["tau_changes"] = report.tau_changes;
  j["converged"] = report.converged;
  j["initial_instances"] = report.initial_instances;
  j["reinforcement_instances"] = report.reinforcement_instances;
  j["tree"] = {{"nodes", model.tree.node_count()},
               {"leaves", model.tree.leaf_count()},
               {"depth", model.tree.depth()}};
  return j.dump(2);
}

std::string explanation_json(const Explanation& explanation, const TrainedModel& model,
                             std::size_t series_length) {
  json j;
  j["predicted_class"] = model.class_names.at(explanation.label);
  j["predicted_index"] = explanation.label;
  j["tau_start"] = explanation.tau_start;
  j["tau_length"] = explanation.tau_length;
  j["start_step"] = explanation.steps.begin;
  j["end_step"] = explanation.steps.end;
  j["series_length"] = series_length;
  j["window_steps"] = model.params.window;
  j["stride_steps"] = model.params.stride;
  j["likelihoods"] = explanation.likelihoods;
  return j.dump(2);
}

void write_relevance_csv(const MultivariateSeries& series, const Explanation& explanation,
                         std::ostream& out) {
  out << "step";
  for (std::size_t d = 0; d < series.dims(); ++d) out << ",dim" << d;
  out << ",relevant_flag\n";
  char buf[32];
  for (std::size_t t = 0; t < series.length(); ++t) {
    out << t;
    for (std::size_t d = 0; d < series.dims(); ++d) {
      const auto end = std::to_chars(buf, buf + sizeof buf, series.at(t, d)).ptr;
      out << ',' << std::string_view(buf, static_cast<std::size_t>(end - buf));
    }
    const bool relevant = t >= explanation.steps.begin && t < explanation.steps.end;
    out << ',' << (relevant ? 1 : 0) << '\n';
  }
}

void write_result_csv(const ResultRow& row, std::ostream& out, bool timings) {
  out << row.dataset << ',' << row.model;
  if (!row.result) {
    out << ",-,-,-,-,-,-,-\n";
    return;
  }
  const auto& r = *row.result;
  for (const double v : {r.accuracy, r.balanced_accuracy, r.hamming_loss, r.macro_f1, r.micro_f1}) {
    out << ',' << fixed(v, 6);
  }
  out << ',' << fixed(timings ? row.train_seconds : 0.0, 3) << ','
      << fixed(timings ? row.test_seconds : 0.0, 3) << '\n';
}

std::string result_json(const ResultRow& row, bool timings) {
  json j;
  j["dataset"] = row.dataset;
  j["model"] = row.model;
  if (row.result) {
    const auto& r = *row.result;
    j["accuracy"] = r.accuracy;
    j["balanced_accuracy"] = r.balanced_accuracy;
    j["hamming_loss"] = r.hamming_loss;
    j["macro_f1"] = r.macro_f1;
    j["micro_f1"] = r.micro_f1;
    j["confusion"] = r.confusion;
    j["train_seconds"] = timings ? row.train_seconds : 0.0;
    j["test_seconds"] = timings ? row.test_seconds : 0.0;
  } else {
    for (const char* key : {"accuracy", "balanced_accuracy", "hamming_loss", "macro_f1", "micro_f1",
                            "train_seconds", "test_seconds"}) {
      j[key] = "-";
    }
  }
  return j.dump();
}

}  // namespace miht
