#include "miht/config.hpp"

#include <stdexcept>
#include <string>

namespace miht {

std::string_view to_string(NaiveBayesMode mode) {
  return mode == NaiveBayesMode::kSum ? "sum" : "product";
}

NaiveBayesMode parse_nb_mode(std::string_view text) {
  if (text == "product") return NaiveBayesMode::kProduct;
  if (text == "sum") return NaiveBayesMode::kSum;
  throw std::invalid_argument("naive Bayes mode must be 'product' or 'sum', got '" +
                              std::string(text) + "'");
}

}  // namespace miht
