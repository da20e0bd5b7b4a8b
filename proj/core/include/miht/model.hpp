#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "miht/bagging.hpp"
#include "miht/hoeffding_tree.hpp"

namespace miht {

/// Everything needed to classify new series: the tree, the window geometry it
/// was trained with, and the label vocabulary.
struct TrainedModel {
  HoeffdingTree tree;
  ResolvedParams params;
  std::vector<std::string> class_names;
  std::size_t dims = 1;

  std::size_t n_classes() const noexcept { return class_names.size(); }

  friend bool operator==(const TrainedModel&, const TrainedModel&) = default;
};

}  // namespace miht
