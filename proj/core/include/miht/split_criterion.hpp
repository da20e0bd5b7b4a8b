#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace miht {

/// epsilon = sqrt(R^2 ln(1/delta) / (2n)). Throws std::invalid_argument unless
/// range > 0, delta in (0, 1] and n >= 1.
double hoeffding_bound(double range, double delta, double n);

/// Range of information gain for `n_classes` classes, log2(max(2, n_classes)).
double info_gain_range(std::size_t n_classes);

/// Shannon entropy in bits of an unnormalized class-weight vector; 0 when empty.
double entropy(std::span<const double> class_weights);

/// H(parent) - sum_i (W_i / W) H(child_i). Empty children contribute nothing
/// and an all-zero parent yields 0.
double info_gain(std::span<const double> parent, std::span<const std::vector<double>> children);

}  // namespace miht
