#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "miht/bagging.hpp"
#include "miht/config.hpp"
#include "miht/metrics.hpp"
#include "miht/predictor.hpp"
#include "miht/trainer.hpp"

namespace miht {

/// Training log: resolved geometry, configuration and the per-iteration
/// tau-change counts.
std::string fit_report_json(const FitReport& report, const TrainedModel& model,
                            const TrainConfig& config);

std::string explanation_json(const Explanation& explanation, const TrainedModel& model,
                             std::size_t series_length);

/// `step,dim0,...,dim{m-1},relevant_flag`, one row per time step; the flag is
/// 1 inside the explanation span.
void write_relevance_csv(const MultivariateSeries& series, const Explanation& explanation,
                         std::ostream& out);

/// One evaluation row. A missing `result` marks a failed or timed-out run and
/// is written with `-` in every metric and timing column.
struct ResultRow {
  std::string dataset;
  std::string model;
  std::optional<EvalResult> result;
  double train_seconds = 0.0;
  double test_seconds = 0.0;
};

inline constexpr const char* kResultCsvHeader =
    "dataset,model,accuracy,balanced_accuracy,hamming_loss,macro_f1,micro_f1,train_seconds,"
    "test_seconds";

/// Metrics with 6 decimals, timings with 3. Without `timings` the timing
/// columns are written as 0 so that output is reproducible byte for byte.
void write_result_csv(const ResultRow& row, std::ostream& out, bool timings = true);
std::string result_json(const ResultRow& row, bool timings = true);

}  // namespace miht
