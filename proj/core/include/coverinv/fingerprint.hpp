#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "coverinv/canonical.hpp"
#include "coverinv/cstar.hpp"
#include "coverinv/digraph.hpp"
#include "coverinv/hpartition.hpp"

namespace coverinv {

class FiniteSpace;
struct Cover;

/// How much of a fingerprint two covers must share to count as the same.
/// Graph is the finest: the other two are functions of the graph class.
enum class Level { Graph, CStar, KTheory };

std::string_view to_string(Level level) noexcept;
/// "graph", "cstar" or "ktheory"; throws InvalidArgument otherwise.
Level parse_level(std::string_view text);

/// Invariant bundle of one cover: its Hasse digraph up to isomorphism, the
/// algebra (block sizes), its K-theory and its primitive spectrum.
struct Fingerprint {
  CanonicalCert graph_cert;
  BlockDecomposition blocks;
  KPair kpair;
  PrimPoset prim;
  CanonicalCert prim_cert;
  /// Where it came from (cover description); not part of any comparison.
  std::string source;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
};

Fingerprint fingerprint_of_graph(const DiGraph& g, std::size_t vertex_cap = kDefaultVertexCap);
Fingerprint fingerprint_of_partition(const HPartition& p, std::size_t vertex_cap = kDefaultVertexCap);
Fingerprint fingerprint_of_cover(const FiniteSpace& space, const Cover& cover,
                                 std::size_t vertex_cap = kDefaultVertexCap);

/// Comparison key of `f` at `level`. Keys from different levels never collide.
std::string level_key(const Fingerprint& f, Level level);

/// Distinct fingerprints at one level, keyed (and so ordered) by level_key.
/// `scope` names the covers looked at, e.g. "n=4" or "n=1..7".
struct FingerprintSet {
  Level level = Level::Graph;
  std::string scope;
  std::map<std::string, Fingerprint> elements;

  bool empty() const noexcept { return elements.empty(); }
  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const std::string& key) const { return elements.count(key) != 0; }
  /// Keeps the first fingerprint seen for each key.
  void insert(const Fingerprint& f);
};

}  // namespace coverinv
