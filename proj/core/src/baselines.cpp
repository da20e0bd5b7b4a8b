#include "miht/baselines.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace miht {
namespace {

double step_cost(const MultivariateSeries& a, std::size_t i, const MultivariateSeries& b,
                 std::size_t j) {
  const auto x = a.step(i);
  const auto y = b.step(j);
  double cost = 0.0;
  for (std::size_t d = 0; d < x.size(); ++d) {
    const double diff = x[d] - y[d];
    cost += diff * diff;
  }
  return cost;
}

template <class Distance>
std::vector<std::size_t> nearest_neighbour(const Dataset& train, const Dataset& test,
                                           const RunControl& control, Distance distance) {
  if (train.empty()) throw std::invalid_argument("1-NN needs a non-empty training set");
  std::vector<std::size_t> out;
  out.reserve(test.size());
  for (const auto& query : test.series) {
    control.check("nearest-neighbour search");
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_label = 0;
    for (const auto& candidate : train.series) {
      const double d = distance(query, candidate);
      if (d < best) {
        best = d;
        best_label = candidate.label().value_or(0);
      }
    }
    out.push_back(best_label);
  }
  return out;
}

}  // namespace

double dtw_distance(const MultivariateSeries& a, const MultivariateSeries& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("DTW: dimension counts differ");
  const std::size_t n = a.length();
  const std::size_t m = b.length();
  constexpr double inf = std::numeric_limits<double>::infinity();
  // Two rolling rows of the (n+1) x (m+1) accumulated-cost table.
  std::vector<double> prev(m + 1, inf), curr(m + 1, inf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = inf;
    for (std::size_t j = 1; j <= m; ++j) {
      const double best = std::min({prev[j], curr[j - 1], prev[j - 1]});
      curr[j] = step_cost(a, i - 1, b, j - 1) + best;
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

double truncated_squared_euclidean(const MultivariateSeries& a, const MultivariateSeries& b,
                                   std::size_t length) {
  if (a.dims() != b.dims()) throw std::invalid_argument("Euclidean: dimension counts differ");
  if (length > a.length() || length > b.length()) {
    throw std::invalid_argument("Euclidean: truncation length exceeds a series");
  }
  double total = 0.0;
  for (std::size_t t = 0; t < length; ++t) total += step_cost(a, t, b, t);
  return total;
}

std::vector<std::size_t> euclidean_1nn(const Dataset& train, const Dataset& test,
                                       const RunControl& control) {
  if (train.empty()) throw std::invalid_argument("1-NN needs a non-empty training set");
  std::size_t length = train.min_length();
  if (!test.empty()) length = std::min(length, test.min_length());
  return nearest_neighbour(train, test, control,
                           [length](const MultivariateSeries& q, const MultivariateSeries& c) {
                             return truncated_squared_euclidean(q, c, length);
                           });
}

std::vector<std::size_t> dtw_1nn(const Dataset& train, const Dataset& test,
                                 const RunControl& control) {
  return nearest_neighbour(train, test, control, [](const MultivariateSeries& q,
                                                    const MultivariateSeries& c) {
    return dtw_distance(q, c);
  });
}

}  // namespace miht
