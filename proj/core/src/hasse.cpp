#include "coverinv/hasse.hpp"

#include <sstream>

namespace coverinv {

std::vector<Edge> inclusion_cover_relations(std::span<const Mask> masks) {
  std::vector<Edge> edges;
  const std::size_t n = masks.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_proper_subset(masks[i], masks[j])) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (is_proper_subset(masks[i], masks[k]) && is_proper_subset(masks[k], masks[j])) covered = false;
      }
      if (covered) edges.emplace_back(i, j);
    }
  }
  return edges;
}

DiGraph hasse_digraph(const HPartition& partition) {
  std::vector<std::vector<std::size_t>> labels;
  labels.reserve(partition.classes.size());
  for (Mask c : partition.classes) labels.push_back(indices_of(c));
  return DiGraph(partition.classes.size(), inclusion_cover_relations(partition.classes), std::move(labels));
}

std::string to_dot(const DiGraph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph";
  if (!options.graph_name.empty()) os << " \"" << options.graph_name << "\"";
  os << " {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v;
    if (options.with_labels && g.has_labels()) {
      os << " [label=\"{";
      const auto& label = g.labels()[v];
      for (std::size_t i = 0; i < label.size(); ++i) {
        os << (i ? "," : "") << label[i] + (options.one_based_labels ? 1 : 0);
      }
      os << "}\"]";
    }
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  v" << u << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace coverinv
