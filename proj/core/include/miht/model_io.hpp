#pragma once

#include <filesystem>
#include <iosfwd>

#include "miht/model.hpp"

namespace miht {

/// Current schema version written on the first line of every model file.
inline constexpr int kModelFormatVersion = 1;

/// Writes the versioned text schema documented in docs/model_format.md.
/// Floating-point values use shortest round-trip formatting, so a loaded
/// model predicts bit-identically. Throws std::invalid_argument if a class
/// name contains whitespace.
void save_model(const TrainedModel& model, std::ostream& out);
void save_model_file(const TrainedModel& model, const std::filesystem::path& path);

/// Throws ModelFormatError on a version mismatch, truncated input, or any
/// malformed field.
TrainedModel load_model(std::istream& in);
TrainedModel load_model_file(const std::filesystem::path& path);

}  // namespace miht
