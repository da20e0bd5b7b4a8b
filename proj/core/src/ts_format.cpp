#include "miht/ts_format.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "miht/error.hpp"
#include "text_util.hpp"

namespace miht {
namespace {

using detail::parse_double;
using detail::split;
using detail::split_whitespace;
using detail::to_lower;
using detail::trim;

bool parse_bool(std::string_view token, std::size_t line_no) {
  const auto lowered = to_lower(token);
  if (lowered == "true") return true;
  if (lowered == "false") return false;
  throw ParseError(line_no, "expected true/false, got '" + std::string(token) + "'");
}

// Fills NaN gaps in one dimension by linear interpolation between the nearest
// observed neighbours; edges copy the nearest observed value.
void interpolate_gaps(std::vector<double>& values, std::size_t line_no, std::size_t dim) {
  std::vector<std::size_t> observed;
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (!std::isnan(values[t])) observed.push_back(t);
  }
  if (observed.empty()) {
    throw ParseError(line_no, "dimension " + std::to_string(dim) +
                                  " has no observed values to interpolate from");
  }
  for (std::size_t t = 0; t < observed.front(); ++t) values[t] = values[observed.front()];
  for (std::size_t t = observed.back() + 1; t < values.size(); ++t) {
    values[t] = values[observed.back()];
  }
  for (std::size_t i = 0; i + 1 < observed.size(); ++i) {
    const std::size_t a = observed[i];
    const std::size_t b = observed[i + 1];
    for (std::size_t t = a + 1; t < b; ++t) {
      const double frac = static_cast<double>(t - a) / static_cast<double>(b - a);
      values[t] = values[a] + frac * (values[b] - values[a]);
    }
  }
}

struct Header {
  std::string name;
  std::optional<std::size_t> dimensions;
  std::optional<bool> equal_length;
  std::optional<std::size_t> series_length;
  bool has_labels = false;
  std::vector<std::string> labels;
};

void parse_header_line(std::string_view line, std::size_t line_no, Header& header) {
  const auto tokens = split_whitespace(line);
  const auto key = to_lower(tokens.front());
  const auto need_value = [&] {
    if (tokens.size() < 2) throw ParseError(line_no, std::string(tokens.front()) + " needs a value");
  };
  if (key == "@problemname") {
    need_value();
    header.name = std::string(tokens[1]);
  } else if (key == "@timestamps") {
    need_value();
    if (parse_bool(tokens[1], line_no)) {
      throw ParseError(line_no, "timestamped series are not supported");
    }
  } else if (key == "@dimensions") {
    need_value();
    const auto dims = detail::parse_integer<std::size_t>(tokens[1]);
    if (!dims || *dims == 0) throw ParseError(line_no, "invalid @dimensions value");
    header.dimensions = *dims;
  } else if (key == "@equallength") {
    need_value();
    header.equal_length = parse_bool(tokens[1], line_no);
  } else if (key == "@serieslength") {
    need_value();
    const auto len = detail::parse_integer<std::size_t>(tokens[1]);
    if (!len || *len == 0) throw ParseError(line_no, "invalid @seriesLength value");
    header.series_length = *len;
  } else if (key == "@classlabel") {
    need_value();
    header.has_labels = parse_bool(tokens[1], line_no);
    if (header.has_labels) {
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const std::string label(tokens[i]);
        if (std::find(header.labels.begin(), header.labels.end(), label) != header.labels.end()) {
          throw ParseError(line_no, "duplicate class label '" + label + "'");
        }
        header.labels.push_back(label);
      }
      if (header.labels.empty()) throw ParseError(line_no, "@classLabel true lists no labels");
    }
  } else if (key == "@targetlabel") {
    throw ParseError(line_no, "regression targets are not supported");
  }
  // @missing, @univariate and unknown keys carry nothing we need.
}

}  // namespace

Dataset parse_ts(std::istream& in, const ParseOptions& options) {
  Header header;
  Dataset dataset;
  std::unordered_map<std::string, std::size_t> label_index;
  bool in_data = false;
  std::size_t expected_dims = 0;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!in_data) {
      if (line.front() != '@') {
        throw ParseError(line_no, "data before @data section");
      }
      if (to_lower(split_whitespace(line).front()) == "@data") {
        in_data = true;
        dataset.name = header.name;
        dataset.class_names = header.labels;
        for (std::size_t i = 0; i < header.labels.size(); ++i) label_index[header.labels[i]] = i;
        expected_dims = header.dimensions.value_or(0);
      } else {
        parse_header_line(line, line_no, header);
      }
      continue;
    }

    auto fields = split(line, ':');
    std::optional<std::size_t> label;
    if (header.has_labels) {
      if (fields.size() < 2) throw ParseError(line_no, "missing class label");
      const std::string name(trim(fields.back()));
      const auto it = label_index.find(name);
      if (it == label_index.end()) throw ParseError(line_no, "unknown class label '" + name + "'");
      label = it->second;
      fields.pop_back();
    }
    if (expected_dims == 0) expected_dims = fields.size();
    if (fields.size() != expected_dims) {
      throw ParseError(line_no, "expected " + std::to_string(expected_dims) + " dimensions, found " +
                                    std::to_string(fields.size()));
    }

    std::vector<std::vector<double>> per_dim(fields.size());
    for (std::size_t d = 0; d < fields.size(); ++d) {
      bool has_gap = false;
      for (const auto token_raw : split(fields[d], ',')) {
        const auto token = trim(token_raw);
        if (token == "?") {
          if (!options.impute) {
            throw ParseError(line_no, "missing value in dimension " + std::to_string(d) +
                                          " (enable imputation to interpolate)");
          }
          has_gap = true;
          per_dim[d].push_back(std::nan(""));
          continue;
        }
        const auto value = parse_double(token);
        if (!value || !std::isfinite(*value)) {
          throw ParseError(line_no, "invalid numeric value '" + std::string(token) + "'");
        }
        per_dim[d].push_back(*value);
      }
      if (has_gap) interpolate_gaps(per_dim[d], line_no, d);
      if (per_dim[d].size() != per_dim.front().size()) {
        throw ParseError(line_no, "dimension " + std::to_string(d) + " has " +
                                      std::to_string(per_dim[d].size()) + " values, dimension 0 has " +
                                      std::to_string(per_dim.front().size()));
      }
    }
    if (header.equal_length.value_or(false) && header.series_length &&
        per_dim.front().size() != *header.series_length) {
      throw ParseError(line_no, "series length " + std::to_string(per_dim.front().size()) +
                                    " differs from @seriesLength " +
                                    std::to_string(*header.series_length));
    }
    dataset.series.push_back(MultivariateSeries::from_dimensions(per_dim, label));
  }
  if (!in_data) throw ParseError(0, "no @data section");
  return dataset;
}

Dataset read_ts_file(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return parse_ts(in, options);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

void write_ts(const Dataset& dataset, std::ostream& out) {
  const bool labeled = !dataset.class_names.empty();
  bool equal_length = true;
  for (const auto& s : dataset.series) {
    equal_length = equal_length && s.length() == dataset.series.front().length();
    if (labeled != s.label().has_value()) {
      throw std::invalid_argument("write_ts: labeled and unlabeled series are mixed");
    }
  }
  if (!dataset.name.empty()) out << "@problemName " << dataset.name << '\n';
  out << "@timeStamps false\n@missing false\n";
  out << "@univariate " << (dataset.dims() == 1 ? "true" : "false") << '\n';
  if (dataset.dims() > 0) out << "@dimensions " << dataset.dims() << '\n';
  out << "@equalLength " << (equal_length ? "true" : "false") << '\n';
  if (equal_length && !dataset.empty()) {
    out << "@seriesLength " << dataset.series.front().length() << '\n';
  }
  out << "@classLabel " << (labeled ? "true" : "false");
  for (const auto& name : dataset.class_names) out << ' ' << name;
  out << "\n@data\n";
  for (const auto& s : dataset.series) {
    for (std::size_t d = 0; d < s.dims(); ++d) {
      if (d > 0) out << ':';
      for (std::size_t t = 0; t < s.length(); ++t) {
        if (t > 0) out << ',';
        out << detail::format_double(s.at(t, d));
      }
    }
    if (labeled) out << ':' << dataset.class_names.at(*s.label());
    out << '\n';
  }
}

}  // namespace miht
