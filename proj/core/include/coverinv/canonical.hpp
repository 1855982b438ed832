#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "coverinv/digraph.hpp"

namespace coverinv {

inline constexpr std::size_t kDefaultVertexCap = 40;

/// Isomorphism-class certificate of an unlabelled digraph: the vertex count
/// followed by the bit-packed adjacency matrix under the canonical ordering.
/// Two digraphs are isomorphic iff their certificates are equal.
struct CanonicalCert {
  std::size_t vertex_count = 0;
  std::string encoding;

  std::string hex() const;
  static CanonicalCert from_hex(const std::string& hex);

  friend bool operator==(const CanonicalCert&, const CanonicalCert&) = default;
  friend auto operator<=>(const CanonicalCert&, const CanonicalCert&) = default;
};

struct CanonicalForm {
  CanonicalCert cert;
  /// position[v] = index of vertex v in the canonical ordering.
  std::vector<std::size_t> position;
};

/// Colour refinement seeded by (DAG level, in-degree, out-degree), then
/// individualisation/refinement search keeping the lexicographically smallest
/// adjacency encoding. Branches are pruned by structural twins and by
/// automorphisms discovered at equal leaves. Throws CapExceeded above `cap`
/// vertices (hard limit 64).
CanonicalForm canonical_form(const DiGraph& g, std::size_t cap = kDefaultVertexCap);
CanonicalCert canonical_cert(const DiGraph& g, std::size_t cap = kDefaultVertexCap);

struct IsomorphismResult {
  bool isomorphic = false;
  /// witness[v] = image in the second graph of vertex v of the first.
  std::vector<std::size_t> witness;
};

/// Decides isomorphism by certificate comparison; when isomorphic the witness
/// is checked edge by edge in both directions before returning.
IsomorphismResult is_isomorphic(const DiGraph& a, const DiGraph& b, std::size_t cap = kDefaultVertexCap);

/// True iff `map` is a bijection carrying the edge set of `a` exactly onto that of `b`.
bool is_isomorphism(const DiGraph& a, const DiGraph& b, const std::vector<std::size_t>& map);

}  // namespace coverinv
