#pragma once

// Synthetic two-class data with a known concept window: unit Gaussian noise
// everywhere, and inside [concept_begin, concept_end) a mean shift of `shift`
// standard deviations whose sign depends on the class (class 0 down, class 1 up).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "miht/series.hpp"

namespace miht::testing {

struct PlantedSpec {
  std::size_t n_series = 200;
  std::size_t length = 100;
  std::size_t dims = 2;
  std::size_t concept_begin = 40;
  std::size_t concept_end = 60;
  double shift = 3.0;
  std::uint64_t seed = 1;
};

inline Dataset make_planted(const PlantedSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  Dataset data;
  data.name = "Planted";
  data.class_names = {"A", "B"};
  for (std::size_t i = 0; i < spec.n_series; ++i) {
    const std::size_t label = i % 2;
    std::vector<double> values(spec.length * spec.dims);
    for (std::size_t t = 0; t < spec.length; ++t) {
      const bool in_concept = t >= spec.concept_begin && t < spec.concept_end;
      for (std::size_t d = 0; d < spec.dims; ++d) {
        const double offset = in_concept ? (label == 1 ? spec.shift : -spec.shift) : 0.0;
        values[t * spec.dims + d] = noise(rng) + offset;
      }
    }
    data.series.emplace_back(std::move(values), spec.length, spec.dims, label);
  }
  return data;
}

inline bool overlaps(std::size_t a_begin, std::size_t a_end, std::size_t b_begin, std::size_t b_end) {
  return a_begin < b_end && b_begin < a_end;
}

}  // namespace miht::testing
