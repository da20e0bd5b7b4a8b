#pragma once

#include <cstddef>
#include <vector>

#include "miht/run_control.hpp"
#include "miht/series.hpp"

namespace miht {

/// Dependent multivariate DTW: full l_a x l_b dynamic program, local cost is
/// the squared Euclidean distance across all dimensions, no warping window
/// and no final square root. Throws std::invalid_argument on a dimension mismatch.
double dtw_distance(const MultivariateSeries& a, const MultivariateSeries& b);

/// Squared Euclidean distance over the first `length` steps of both series.
double truncated_squared_euclidean(const MultivariateSeries& a, const MultivariateSeries& b,
                                   std::size_t length);

/// 1-NN with Euclidean distance after truncating every train and test series
/// to the shortest length among both sets. Ties go to the earliest training
/// series. Throws std::invalid_argument when `train` is empty.
std::vector<std::size_t> euclidean_1nn(const Dataset& train, const Dataset& test,
                                       const RunControl& control = {});

/// 1-NN under dtw_distance on the untruncated series.
std::vector<std::size_t> dtw_1nn(const Dataset& train, const Dataset& test,
                                 const RunControl& control = {});

}  // namespace miht
