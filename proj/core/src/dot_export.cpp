#include "miht/dot_export.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace miht {
namespace {

std::string short_number(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

std::string escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string split_label(const SplitCondition& split, std::size_t window) {
  const auto loc = locate_attribute(split.attribute, window);
  const char* op = split.kind == SplitKind::kNumeric ? " ≤ " : " = ";
  return "dim " + std::to_string(loc.dim) + " @ step " + std::to_string(loc.offset) + op +
         short_number(split.threshold);
}

void write_dot(const TrainedModel& model, std::ostream& out) {
  const auto& nodes = model.tree.nodes();
  out << "digraph miht {\n";
  out << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (!node.is_leaf()) {
      out << "  n" << i << " [label=\"" << escape(split_label(*node.split, model.params.window))
          << "\"];\n";
      out << "  n" << i << " -> n" << node.left << " [label=\"yes\"];\n";
      out << "  n" << i << " -> n" << node.right << " [label=\"no\"];\n";
      continue;
    }
    const auto& w = node.stats.class_weights;
    std::string label = "class " + escape(model.class_names.at(node.stats.majority_class()));
    for (std::size_t c = 0; c < w.size(); ++c) {
      if (w[c] > 0.0) label += "\\n" + escape(model.class_names.at(c)) + ": " + short_number(w[c]);
    }
    out << "  n" << i << " [shape=ellipse, label=\"" << label << "\"];\n";
  }
  out << "}\n";
}

}  // namespace miht
