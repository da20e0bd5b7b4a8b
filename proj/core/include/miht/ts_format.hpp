#pragma once

#include <filesystem>
#include <iosfwd>

#include "miht/series.hpp"

namespace miht {

struct ParseOptions {
  /// Replace `?` values by per-dimension linear interpolation instead of
  /// failing. Leading/trailing gaps take the nearest observed value.
  bool impute = false;
};

/// Reads the sktime/UEA `.ts` text format (no timestamps). Class labels are
/// mapped to indices in `@classLabel` header order.
Dataset parse_ts(std::istream& in, const ParseOptions& options = {});
Dataset read_ts_file(const std::filesystem::path& path, const ParseOptions& options = {});

/// Writes a dataset that parse_ts reads back to an equal Dataset.
void write_ts(const Dataset& dataset, std::ostream& out);

}  // namespace miht
