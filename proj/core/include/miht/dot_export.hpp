#pragma once

#include <iosfwd>
#include <string>

#include "miht/model.hpp"

namespace miht {

/// Graphviz rendering of the tree. Split nodes read `dim d @ step t ≤ x`
/// with (d, t) decoded from the attribute index through the window layout;
/// leaves show the majority class and the class-weight histogram.
void write_dot(const TrainedModel& model, std::ostream& out);

/// Human-readable condition of one split, as used in the DOT labels.
std::string split_label(const SplitCondition& split, std::size_t window);

}  // namespace miht
