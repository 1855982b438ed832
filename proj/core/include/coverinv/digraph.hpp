#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace coverinv {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite simple digraph: no self-loops, no parallel edges. Vertices are
/// 0..n-1; optional per-vertex labels hold the h-class member indices when the
/// graph came from an HPartition.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(std::size_t vertex_count);
  /// Throws InvalidArgument on self-loops or out-of-range endpoints.
  DiGraph(std::size_t vertex_count, std::vector<Edge> edges,
          std::vector<std::vector<std::size_t>> labels = {});

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sorted, duplicate-free.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& successors(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& predecessors(std::size_t v) const { return in_.at(v); }
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t out_degree(std::size_t v) const { return out_.at(v).size(); }
  std::size_t in_degree(std::size_t v) const { return in_.at(v).size(); }
  bool is_sink(std::size_t v) const { return out_.at(v).empty(); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::vector<std::size_t>>& labels() const noexcept { return labels_; }

  /// Vertex v moves to perm[v]; labels travel with their vertex.
  DiGraph relabeled(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> labels_;
};

/// A directed cycle as a vertex sequence (first vertex not repeated), if any.
std::optional<std::vector<std::size_t>> find_cycle(const DiGraph& g);

/// Topological order; throws NotAcyclic with the witness cycle.
std::vector<std::size_t> topological_order(const DiGraph& g);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
DiGraph disjoint_union(const DiGraph& a, const DiGraph& b);

}  // namespace coverinv
