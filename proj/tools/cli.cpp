#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "miht/baselines.hpp"
#include "miht/dot_export.hpp"
#include "miht/error.hpp"
#include "miht/metrics.hpp"
#include "miht/model_io.hpp"
#include "miht/predictor.hpp"
#include "miht/report_io.hpp"
#include "miht/trainer.hpp"
#include "miht/ts_format.hpp"

namespace miht::cli {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

void configure_logging() {
  static std::once_flag once;
  std::call_once(once, [] {
    auto logger = std::make_shared<spdlog::logger>(
        "miht", std::make_shared<spdlog::sinks::stderr_sink_mt>());
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
  });
  const char* level = std::getenv("MIHT_LOG");
  spdlog::set_level(level ? spdlog::level::from_str(level) : spdlog::level::info);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Flags shared by `train` and `bench`.
struct TrainFlags {
  TrainConfig config;
  std::optional<double> tie_threshold;
  std::string nb_mode = "product";
  bool impute = false;

  void attach(CLI::App& app) {
    app.add_option("--omega", config.window_fraction, "instance length, fraction of mean length")
        ->capture_default_str()->check(CLI::Range(0.0, 1.0));
    app.add_option("--lambda", config.stride_fraction, "stride between instances, fraction of mean length")
        ->capture_default_str()->check(CLI::Range(0.0, 1.0));
    app.add_option("-k", config.k, "consecutive instances selected per bag")
        ->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--kappa", config.grace_fraction, "grace period, fraction of mean bag size")
        ->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--delta", config.delta, "Hoeffding bound significance")
        ->capture_default_str()->check(CLI::Range(0.0, 1.0));
    app.add_option("--max-iters", config.max_iterations, "reinforcement iteration cap")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
    app.add_option("--seed", config.seed, "seed recorded in the training report")->capture_default_str();
    app.add_option("--nb", nb_mode, "naive Bayes combination of attribute densities")
        ->capture_default_str()->check(CLI::IsMember({"product", "sum"}));
    app.add_option("--tie-threshold", tie_threshold, "split when the bound falls below this value")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--impute", impute, "interpolate '?' values instead of rejecting them");
  }

  TrainConfig resolve() const {
    TrainConfig c = config;
    c.nb_mode = parse_nb_mode(nb_mode);
    c.tie_threshold = tie_threshold;
    return c;
  }
};

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

// ---------------------------------------------------------------- train

int cmd_train(const TrainFlags& flags, const std::string& train_path, const std::string& model_path,
              const std::string& report_path, std::ostream& out) {
  const auto config = flags.resolve();
  const auto train = read_ts_file(train_path, ParseOptions{flags.impute});
  spdlog::info("loaded {}: {} series, {} dims, {} classes", train_path, train.size(), train.dims(),
               train.n_classes());
  const auto start = Clock::now();
  const auto fitted = fit(train, config);
  const auto& p = fitted.model.params;
  spdlog::info("resolved omega_steps={} lambda_steps={} k={} kappa_count={}", p.window, p.stride,
               p.k, p.grace_period);
  spdlog::info("trained in {:.3f}s: {} iterations, converged={}, {} nodes", seconds_since(start),
               fitted.report.iterations, fitted.report.converged, fitted.model.tree.node_count());
  save_model_file(fitted.model, model_path);

  const auto report = fit_report_json(fitted.report, fitted.model, config);
  if (report_path.empty()) {
    out << report << '\n';
  } else {
    write_text_file(report_path, report + "\n");
  }
  return kExitOk;
}

// ------------------------------------------------------------- evaluate

int cmd_evaluate(const std::string& model_path, const std::string& test_path,
                 const std::string& format, bool impute, bool timings, std::ostream& out) {
  const auto model = load_model_file(model_path);
  const auto test = read_ts_file(test_path, ParseOptions{impute});
  const auto start = Clock::now();
  ResultRow row;
  row.dataset = test.name.empty() ? fs::path(test_path).stem().string() : test.name;
  row.model = "miht";
  row.result = evaluate(model, test);
  row.test_seconds = seconds_since(start);
  if (format == "json") {
    out << result_json(row, timings) << '\n';
  } else {
    out << kResultCsvHeader << '\n';
    write_result_csv(row, out, timings);
  }
  return kExitOk;
}

// -------------------------------------------------------------- predict

int cmd_predict(const std::string& model_path, const std::string& test_path,
                const std::string& format, bool impute, std::ostream& out) {
  const auto model = load_model_file(model_path);
  const auto data = read_ts_file(test_path, ParseOptions{impute});
  if (format == "json") out << "[\n";
  else out << "index,predicted,truth\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& s = data.series[i];
    const auto report = predict(model, s);
    const std::string predicted = model.class_names.at(report.label);
    std::string truth;
    if (s.label() && *s.label() < data.class_names.size()) truth = data.class_names[*s.label()];
    if (format == "json") {
      out << "  {\"index\": " << i << ", \"predicted\": \"" << predicted << "\", \"truth\": "
          << (truth.empty() ? "null" : "\"" + truth + "\"") << '}'
          << (i + 1 < data.size() ? ",\n" : "\n");
    } else {
      out << i << ',' << predicted << ',' << truth << '\n';
    }
  }
  if (format == "json") out << "]\n";
  return kExitOk;
}

// -------------------------------------------------------------- explain

int cmd_explain(const std::string& model_path, const std::string& series_path, std::size_t index,
                const std::string& out_dir, bool impute, std::ostream& out) {
  const auto model = load_model_file(model_path);
  std::ostringstream dot;
  write_dot(model, dot);

  std::optional<std::pair<std::string, std::string>> explained;  // json, csv
  if (!series_path.empty()) {
    const auto data = read_ts_file(series_path, ParseOptions{impute});
    if (index >= data.size()) {
      throw Error("series index " + std::to_string(index) + " out of range (file has " +
                  std::to_string(data.size()) + " series)");
    }
    const auto& series = data.series[index];
    const auto e = explain(model, series);
    std::ostringstream csv;
    write_relevance_csv(series, e, csv);
    explained.emplace(explanation_json(e, model, series.length()), csv.str());
  }

  if (out_dir.empty()) {
    out << dot.str();
    if (explained) out << explained->first << '\n' << explained->second;
    return kExitOk;
  }
  fs::create_directories(out_dir);
  write_text_file(fs::path(out_dir) / "tree.dot", dot.str());
  if (explained) {
    write_text_file(fs::path(out_dir) / "explanation.json", explained->first + "\n");
    write_text_file(fs::path(out_dir) / "relevance.csv", explained->second);
  }
  spdlog::info("wrote explanation files to {}", out_dir);
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct DatasetPair {
  std::string name;
  fs::path train;
  fs::path test;
};

std::vector<DatasetPair> discover_datasets(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  const std::string suffix = "_TRAIN.ts";
  std::vector<DatasetPair> pairs;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto file = entry.path().filename().string();
    if (file.size() <= suffix.size() || !file.ends_with(suffix)) continue;
    const auto name = file.substr(0, file.size() - suffix.size());
    const auto test = entry.path().parent_path() / (name + "_TEST.ts");
    if (!fs::exists(test)) {
      spdlog::warn("skipping {}: no matching {}_TEST.ts", entry.path().string(), name);
      continue;
    }
    pairs.push_back({name, entry.path(), test});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const DatasetPair& a, const DatasetPair& b) { return a.name < b.name; });
  return pairs;
}

std::vector<ResultRow> bench_dataset(const DatasetPair& pair, const std::vector<std::string>& models,
                                     const TrainFlags& flags, std::optional<double> timeout) {
  const RunControl control =
      timeout ? RunControl::with_timeout(std::chrono::milliseconds(
                    static_cast<long long>(std::llround(*timeout * 1000.0))))
              : RunControl{};
  std::vector<ResultRow> rows;
  std::optional<Dataset> train, test;
  try {
    train = read_ts_file(pair.train, ParseOptions{flags.impute});
    test = read_ts_file(pair.test, ParseOptions{flags.impute});
  } catch (const std::exception& e) {
    spdlog::error("{}: {}", pair.name, e.what());
  }
  for (const auto& model : models) {
    ResultRow row{pair.name, model, std::nullopt, 0.0, 0.0};
    if (train && test) {
      try {
        if (test->class_names != train->class_names) throw Error("train/test class sets differ");
        const auto truth = labels_of(*test);
        std::vector<std::size_t> predicted;
        auto start = Clock::now();
        if (model == "miht") {
          const auto fitted = fit(*train, flags.resolve(), control);
          row.train_seconds = seconds_since(start);
          start = Clock::now();
          for (const auto& s : test->series) {
            control.check("prediction");
            predicted.push_back(predict(fitted.model, s).label);
          }
        } else if (model == "1nn-ed") {
          predicted = euclidean_1nn(*train, *test, control);
        } else {
          predicted = dtw_1nn(*train, *test, control);
        }
        row.test_seconds = seconds_since(start);
        row.result = evaluate_predictions(truth, predicted, train->n_classes());
      } catch (const std::exception& e) {
        spdlog::warn("{} / {} failed: {}", pair.name, model, e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_bench(const std::string& data_dir, const std::string& models_arg, const std::string& out_path,
              const TrainFlags& flags, std::optional<double> timeout, std::size_t jobs, bool timings,
              std::ostream& out) {
  std::vector<std::string> models;
  std::stringstream ss(models_arg);
  for (std::string m; std::getline(ss, m, ',');) {
    if (m.empty()) continue;
    if (m != "miht" && m != "1nn-ed" && m != "1nn-dtw") {
      throw CLI::ValidationError("--models", "unknown model '" + m + "'");
    }
    models.push_back(m);
  }
  if (models.empty()) throw CLI::ValidationError("--models", "no models given");
  flags.resolve();  // reject a bad --nb early

  const auto datasets = discover_datasets(data_dir);
  spdlog::info("bench: {} datasets x {} models, {} jobs", datasets.size(), models.size(), jobs);
  std::vector<std::vector<ResultRow>> results(datasets.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < datasets.size(); i = next++) {
      spdlog::info("bench: {}", datasets[i].name);
      results[i] = bench_dataset(datasets[i], models, flags, timeout);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t j = 1; j < std::max<std::size_t>(1, jobs); ++j) pool.emplace_back(worker);
    worker();
  }

  std::ostringstream table;
  table << kResultCsvHeader << '\n';
  for (const auto& rows : results) {
    for (const auto& row : rows) write_result_csv(row, table, timings);
  }
  if (out_path.empty()) {
    out << table.str();
  } else {
    write_text_file(out_path, table.str());
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_logging();

  CLI::App app{"MIHT: multi-instance Hoeffding tree for time series classification", "miht"};
  app.require_subcommand(1);

  TrainFlags train_flags;
  std::string train_path, model_out, report_path;
  auto* train = app.add_subcommand("train", "train a model on a .ts file");
  train->add_option("--train", train_path, "training .ts file")->required();
  train->add_option("--out", model_out, "model file to write")->required();
  train->add_option("--report", report_path, "write the JSON fit report here instead of stdout");
  train_flags.attach(*train);

  std::string model_path, test_path, format = "csv";
  bool eval_impute = false, no_timings = false;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "score a model on a labeled .ts file");
  evaluate_cmd->add_option("--model", model_path, "model file")->required();
  evaluate_cmd->add_option("--test", test_path, "labeled .ts file")->required();
  evaluate_cmd->add_option("--format", format, "row format")->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  evaluate_cmd->add_flag("--impute", eval_impute, "interpolate '?' values");
  evaluate_cmd->add_flag("--no-timings", no_timings, "write 0 in the timing columns");

  auto* predict_cmd = app.add_subcommand("predict", "predict the class of every series in a .ts file");
  predict_cmd->add_option("--model", model_path, "model file")->required();
  predict_cmd->add_option("--test", test_path, ".ts file")->required();
  predict_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  predict_cmd->add_flag("--impute", eval_impute, "interpolate '?' values");

  std::string series_path, out_dir;
  std::size_t index = 0;
  auto* explain_cmd = app.add_subcommand("explain", "export the tree and explain one series");
  explain_cmd->add_option("--model", model_path, "model file")->required();
  auto* series_opt = explain_cmd->add_option("--series", series_path, ".ts file holding the series");
  explain_cmd->add_option("--index", index, "series index within --series")->needs(series_opt)
      ->capture_default_str();
  explain_cmd->add_option("--out-dir", out_dir,
                          "write tree.dot, explanation.json and relevance.csv here");
  explain_cmd->add_flag("--impute", eval_impute, "interpolate '?' values");

  TrainFlags bench_flags;
  std::string data_dir, models = "miht,1nn-ed,1nn-dtw", bench_out;
  std::optional<double> timeout;
  std::size_t jobs = 1;
  auto* bench = app.add_subcommand("bench", "evaluate models on every <name>_TRAIN.ts/_TEST.ts pair");
  bench->add_option("--data-dir", data_dir, "directory searched recursively")->required();
  bench->add_option("--models", models, "comma-separated: miht,1nn-ed,1nn-dtw")->capture_default_str();
  bench->add_option("--out", bench_out, "CSV file to write instead of stdout");
  bench->add_option("--timeout", timeout, "wall-clock seconds allowed per dataset")
      ->check(CLI::PositiveNumber);
  bench->add_option("--jobs", jobs, "datasets processed concurrently")->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_flag("--no-timings", no_timings, "write 0 in the timing columns");
  bench_flags.attach(*bench);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "miht: " << e.what() << "\n" << "run 'miht --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (train->parsed()) return cmd_train(train_flags, train_path, model_out, report_path, out);
    if (evaluate_cmd->parsed()) {
      return cmd_evaluate(model_path, test_path, format, eval_impute, !no_timings, out);
    }
    if (predict_cmd->parsed()) return cmd_predict(model_path, test_path, format, eval_impute, out);
    if (explain_cmd->parsed()) {
      return cmd_explain(model_path, series_path, index, out_dir, eval_impute, out);
    }
    if (bench->parsed()) {
      return cmd_bench(data_dir, models, bench_out, bench_flags, timeout, jobs, !no_timings, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "miht: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "miht: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace miht::cli
