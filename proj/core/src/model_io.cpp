#include "miht/model_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "miht/error.hpp"
#include "text_util.hpp"

namespace miht {
namespace {

using detail::format_double;

constexpr std::string_view kMagic = "miht-model";

// Line-oriented reader: every record is one line of whitespace-separated
// tokens whose first token names the record.
class RecordReader {
 public:
  explicit RecordReader(std::istream& in) : in_(in) {}

  /// Next non-blank record of any type.
  std::vector<std::string> next_any(std::string_view what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto trimmed = detail::trim(line);
      if (trimmed.empty()) continue;
      std::vector<std::string> tokens;
      for (const auto t : detail::split_whitespace(trimmed)) tokens.emplace_back(t);
      return tokens;
    }
    fail("truncated model file: missing " + std::string(what));
  }

  std::vector<std::string> next(std::string_view expected) {
    auto tokens = next_any("'" + std::string(expected) + "' record");
    if (tokens.front() != expected) {
      fail("expected '" + std::string(expected) + "' record, found '" + tokens.front() + "'");
    }
    return tokens;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ModelFormatError("model line " + std::to_string(line_no_) + ": " + what);
  }

  double number(const std::vector<std::string>& tokens, std::size_t i) const {
    field(tokens, i);
    const auto v = detail::parse_double(tokens[i]);
    if (!v) fail("invalid number '" + tokens[i] + "'");
    return *v;
  }

  std::size_t count(const std::vector<std::string>& tokens, std::size_t i) const {
    field(tokens, i);
    const auto v = detail::parse_integer<std::size_t>(tokens[i]);
    if (!v) fail("invalid count '" + tokens[i] + "'");
    return *v;
  }

  const std::string& word(const std::vector<std::string>& tokens, std::size_t i) const {
    field(tokens, i);
    return tokens[i];
  }

  void expect_size(const std::vector<std::string>& tokens, std::size_t n) const {
    if (tokens.size() != n) {
      fail("'" + tokens.front() + "' record has " + std::to_string(tokens.size()) +
           " fields, expected " + std::to_string(n));
    }
  }

 private:
  void field(const std::vector<std::string>& tokens, std::size_t i) const {
    if (i >= tokens.size()) fail("'" + tokens.front() + "' record is missing fields");
  }

  std::istream& in_;
  std::size_t line_no_ = 0;
};

void write_stats_line(std::ostream& out, const NodeStats& stats) {
  out << "weight " << format_double(stats.weight);
  for (const double w : stats.class_weights) out << ' ' << format_double(w);
  out << '\n';
}

}  // namespace

void save_model(const TrainedModel& model, std::ostream& out) {
  const auto& opts = model.tree.options();
  out << kMagic << ' ' << kModelFormatVersion << '\n';
  out << "classes " << model.class_names.size();
  for (const auto& name : model.class_names) {
    if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos) {
      throw std::invalid_argument("class name '" + name + "' cannot be stored");
    }
    out << ' ' << name;
  }
  out << '\n';
  out << "dims " << model.dims << '\n';
  out << "params " << model.params.window << ' ' << model.params.stride << ' ' << model.params.k
      << ' ' << model.params.grace_period << '\n';
  out << "tree " << opts.n_classes << ' ' << opts.n_attributes << ' ' << format_double(opts.delta)
      << ' ' << opts.grace_period << ' '
      << (opts.tie_threshold ? format_double(*opts.tie_threshold) : std::string("none")) << ' '
      << to_string(opts.nb_mode) << '\n';

  const auto& nodes = model.tree.nodes();
  out << "nodes " << nodes.size() << '\n';
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (node.is_leaf()) {
      out << "leaf " << i << '\n';
      write_stats_line(out, node.stats);
      out << "counters " << format_double(node.stats.seen_since_split_attempt) << ' '
          << format_double(node.stats.nb_correct) << ' ' << format_double(node.stats.mc_correct)
          << '\n';
      for (const auto& obs : node.stats.attributes) {
        out << "attr " << format_double(obs.min) << ' ' << format_double(obs.max);
        for (const auto& g : obs.per_class) {
          out << ' ' << format_double(g.weight()) << ' ' << format_double(g.mean()) << ' '
              << format_double(g.m2()) << ' ' << format_double(g.min()) << ' '
              << format_double(g.max());
        }
        out << '\n';
      }
    } else {
      const auto& s = *node.split;
      out << "split " << i << ' ' << (s.kind == SplitKind::kNumeric ? "numeric" : "categorical")
          << ' ' << s.attribute << ' ' << format_double(s.threshold) << ' ' << node.left << ' '
          << node.right << '\n';
      write_stats_line(out, node.stats);
    }
  }
  out << "end\n";
}

TrainedModel load_model(std::istream& in) {
  RecordReader reader(in);
  const auto header = reader.next(kMagic);
  reader.expect_size(header, 2);
  const auto version = detail::parse_integer<int>(header[1]);
  if (!version || *version != kModelFormatVersion) {
    throw ModelFormatError("unsupported model format version '" + header[1] + "' (expected " +
                           std::to_string(kModelFormatVersion) + ")");
  }

  const auto classes = reader.next("classes");
  const std::size_t n_classes = reader.count(classes, 1);
  reader.expect_size(classes, 2 + n_classes);
  std::vector<std::string> class_names(classes.begin() + 2, classes.end());

  const auto dims_rec = reader.next("dims");
  reader.expect_size(dims_rec, 2);
  const std::size_t dims = reader.count(dims_rec, 1);

  const auto params_rec = reader.next("params");
  reader.expect_size(params_rec, 5);
  ResolvedParams params{reader.count(params_rec, 1), reader.count(params_rec, 2),
                        reader.count(params_rec, 3), reader.count(params_rec, 4)};

  const auto tree_rec = reader.next("tree");
  reader.expect_size(tree_rec, 7);
  TreeOptions opts;
  opts.n_classes = reader.count(tree_rec, 1);
  opts.n_attributes = reader.count(tree_rec, 2);
  opts.delta = reader.number(tree_rec, 3);
  opts.grace_period = reader.count(tree_rec, 4);
  if (tree_rec[5] != "none") opts.tie_threshold = reader.number(tree_rec, 5);
  try {
    opts.nb_mode = parse_nb_mode(tree_rec[6]);
  } catch (const std::invalid_argument& e) {
    reader.fail(e.what());
  }
  if (opts.n_classes != n_classes) reader.fail("tree class count differs from class list");
  if (opts.n_attributes != dims * params.window) {
    reader.fail("attribute count does not equal dims x window");
  }

  const auto nodes_rec = reader.next("nodes");
  reader.expect_size(nodes_rec, 2);
  const std::size_t n_nodes = reader.count(nodes_rec, 1);
  if (n_nodes == 0) reader.fail("model has no nodes");

  const auto read_stats = [&](NodeStats& stats) {
    const auto rec = reader.next("weight");
    reader.expect_size(rec, 2 + n_classes);
    stats.weight = reader.number(rec, 1);
    stats.class_weights.resize(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) stats.class_weights[c] = reader.number(rec, 2 + c);
  };

  std::vector<TreeNode> nodes(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    const auto rec = reader.next_any("node " + std::to_string(i));
    const auto& kind = rec.front();
    auto& node = nodes[i];
    if (kind == "leaf") {
      reader.expect_size(rec, 2);
      if (reader.count(rec, 1) != i) reader.fail("node ids out of order");
      read_stats(node.stats);
      const auto counters = reader.next("counters");
      reader.expect_size(counters, 4);
      node.stats.seen_since_split_attempt = reader.number(counters, 1);
      node.stats.nb_correct = reader.number(counters, 2);
      node.stats.mc_correct = reader.number(counters, 3);
      node.stats.attributes.resize(opts.n_attributes);
      for (auto& obs : node.stats.attributes) {
        const auto attr = reader.next("attr");
        reader.expect_size(attr, 3 + 5 * n_classes);
        obs.min = reader.number(attr, 1);
        obs.max = reader.number(attr, 2);
        obs.per_class.reserve(n_classes);
        for (std::size_t c = 0; c < n_classes; ++c) {
          const std::size_t b = 3 + 5 * c;
          obs.per_class.push_back(GaussianEstimator::from_state(
              reader.number(attr, b), reader.number(attr, b + 1), reader.number(attr, b + 2),
              reader.number(attr, b + 3), reader.number(attr, b + 4)));
        }
      }
    } else if (kind == "split") {
      reader.expect_size(rec, 7);
      if (reader.count(rec, 1) != i) reader.fail("node ids out of order");
      SplitCondition cond;
      const auto& split_kind = reader.word(rec, 2);
      if (split_kind == "numeric") {
        cond.kind = SplitKind::kNumeric;
      } else if (split_kind == "categorical") {
        cond.kind = SplitKind::kCategorical;
      } else {
        reader.fail("unknown split kind '" + split_kind + "'");
      }
      cond.attribute = reader.count(rec, 3);
      cond.threshold = reader.number(rec, 4);
      node.left = reader.count(rec, 5);
      node.right = reader.count(rec, 6);
      node.split = cond;
      read_stats(node.stats);
    } else {
      reader.fail("expected 'leaf' or 'split' record, found '" + kind + "'");
    }
  }
  reader.expect_size(reader.next("end"), 1);

  try {
    return TrainedModel{HoeffdingTree::from_nodes(opts, std::move(nodes)), params,
                        std::move(class_names), dims};
  } catch (const std::invalid_argument& e) {
    throw ModelFormatError(std::string("inconsistent model: ") + e.what());
  }
}

void save_model_file(const TrainedModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  save_model(model, out);
  if (!out) throw Error("failed writing " + path.string());
}

TrainedModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return load_model(in);
}

}  // namespace miht
