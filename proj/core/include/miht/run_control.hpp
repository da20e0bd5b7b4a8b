#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "miht/error.hpp"

namespace miht {

/// Cooperative wall-clock limit checked by long-running loops.
struct RunControl {
  using Clock = std::chrono::steady_clock;

  std::optional<Clock::time_point> deadline;

  static RunControl with_timeout(std::chrono::milliseconds budget) {
    return RunControl{Clock::now() + budget};
  }

  /// Throws TimeoutError once the deadline has passed.
  void check(const char* where) const {
    if (deadline && Clock::now() >= *deadline) {
      throw TimeoutError(std::string("deadline exceeded during ") + where);
    }
  }
};

}  // namespace miht
