#pragma once

#include <span>
#include <string>
#include <vector>

#include "coverinv/digraph.hpp"
#include "coverinv/hpartition.hpp"

namespace coverinv {

/// Cover relations of the inclusion order on distinct masks: (i, j) whenever
/// masks[i] ⊊ masks[j] with nothing strictly in between.
std::vector<Edge> inclusion_cover_relations(std::span<const Mask> masks);

/// Hasse digraph of an h-partition under [x] <= [y] iff h(x) ⊆ h(y). One vertex
/// per class (same order), edges from smaller to larger class, isolated
/// classes get no edge. Labels are the member-index lists of the classes.
DiGraph hasse_digraph(const HPartition& partition);

struct DotOptions {
  std::string graph_name;  // empty: anonymous `digraph {`
  bool with_labels = true;
  /// 1-based member indices in labels, matching how covers are usually written.
  bool one_based_labels = true;
};

/// Graphviz DOT text; vertex lines first in index order, then edges in sorted order.
std::string to_dot(const DiGraph& g, const DotOptions& options = {});

}  // namespace coverinv
