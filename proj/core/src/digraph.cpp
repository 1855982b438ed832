#include "coverinv/digraph.hpp"

#include <algorithm>

#include "coverinv/error.hpp"

namespace coverinv {

DiGraph::DiGraph(std::size_t vertex_count) : DiGraph(vertex_count, {}) {}

DiGraph::DiGraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::vector<std::size_t>> labels)
    : n_(vertex_count), edges_(std::move(edges)), out_(vertex_count), in_(vertex_count), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_) {
    throw Error(ErrorKind::InvalidArgument, "label count must match vertex count");
  }
  for (const auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) {
      throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range", {{"edge", {u, v}}, {"n", n_}});
    }
    if (u == v) throw Error(ErrorKind::InvalidArgument, "self-loops are not allowed", {{"vertex", u}});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& preds : in_) std::sort(preds.begin(), preds.end());
}

bool DiGraph::has_edge(std::size_t u, std::size_t v) const {
  const auto& succ = out_.at(u);
  return std::binary_search(succ.begin(), succ.end(), v);
}

DiGraph DiGraph::relabeled(const std::vector<std::size_t>& perm) const {
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (const auto& [u, v] : edges_) e.emplace_back(perm.at(u), perm.at(v));
  std::vector<std::vector<std::size_t>> l;
  if (!labels_.empty()) {
    l.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) l[perm.at(v)] = labels_[v];
  }
  return DiGraph(n_, std::move(e), std::move(l));
}

std::optional<std::vector<std::size_t>> find_cycle(const DiGraph& g) {
  enum : unsigned char { White, Grey, Black };
  const std::size_t n = g.vertex_count();
  std::vector<unsigned char> colour(n, White);
  std::vector<std::size_t> parent(n, n);

  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != White) continue;
    // Iterative DFS: stack of (vertex, next successor index).
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = Grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& succ = g.successors(v);
      if (next == succ.size()) {
        colour[v] = Black;
        stack.pop_back();
        continue;
      }
      const std::size_t w = succ[next++];
      if (colour[w] == Grey) {
        std::vector<std::size_t> cycle{w};
        for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (colour[w] == White) {
        colour[w] = Grey;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> topological_order(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n);
  for (std::size_t v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto w : g.successors(order[i]))
      if (--indeg[w] == 0) order.push_back(w);
  }
  if (order.size() != n) {
    auto cycle = find_cycle(g).value_or(std::vector<std::size_t>{});
    throw Error(ErrorKind::NotAcyclic, "digraph contains a directed cycle", {{"cycle", cycle}});
  }
  return order;
}

DiGraph disjoint_union(const DiGraph& a, const DiGraph& b) {
  std::vector<Edge> e = a.edges();
  const std::size_t shift = a.vertex_count();
  for (const auto& [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
  std::vector<std::vector<std::size_t>> labels;
  if (a.has_labels() && b.has_labels()) {
    labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  }
  return DiGraph(a.vertex_count() + b.vertex_count(), std::move(e), std::move(labels));
}

}  // namespace coverinv
