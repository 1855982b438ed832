#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coverinv/canonical.hpp"
#include "coverinv/digraph.hpp"
#include "coverinv/mask.hpp"
#include "coverinv/rational.hpp"
#include "coverinv/snf.hpp"

namespace coverinv {

/// C*(g) for a finite acyclic g is a direct sum of full matrix algebras, one
/// per sink; blocks[i] is the matrix size of one summand. Sorted ascending.
struct BlockDecomposition {
  std::vector<std::uint64_t> blocks;

  std::string to_string() const;  // "1,3,3"
  friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
  friend auto operator<=>(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// One block per sink: the number of directed paths ending there, the trivial
/// path included. Throws NotAcyclic (with the cycle) or CapExceeded if a path
/// count overflows 64 bits.
BlockDecomposition block_decomposition(const DiGraph& g);

/// K0 = Z^k0_rank + sum Z/t for t in torsion (each >= 2, t_i | t_{i+1});
/// K1 = Z^k1_rank.
struct KPair {
  std::size_t k0_rank = 0;
  std::vector<BigInt> torsion;
  std::size_t k1_rank = 0;

  std::string to_string() const;  // "K0=Z^2+Z/2,K1=0"
  friend bool operator==(const KPair&, const KPair&) = default;
  friend bool operator<(const KPair& a, const KPair& b);
};

/// The |V| x |regular vertices| matrix A^t - I restricted to regular columns:
/// entry (w, j) = A[v_j][w] - [v_j == w], where v_j is the j-th non-sink.
IntMatrix k_theory_matrix(const DiGraph& g);

/// Cokernel and kernel of k_theory_matrix, read off its Smith normal form.
/// Works for any finite digraph, cyclic or not.
KPair k_theory(const DiGraph& g);

/// Maximal tails of an acyclic digraph, sorted by SizeLexLess. For a DAG
/// these are the ancestor closures of the sinks. Throws NotAcyclic, or
/// CapExceeded above `cap` vertices.
std::vector<Mask> maximal_tails(const DiGraph& g, std::size_t cap = kDefaultVertexCap);

/// The primitive spectrum as a finite ordered space. order holds (i, j) with
/// i != j whenever points[i] ⊋ points[j] (reverse tail containment), i.e.
/// the ideal of i lies below the ideal of j.
struct PrimPoset {
  std::vector<Mask> points;
  std::vector<Edge> order;

  friend bool operator==(const PrimPoset&, const PrimPoset&) = default;
};

PrimPoset prim_space(const DiGraph& g, std::size_t cap = kDefaultVertexCap);

/// Canonical certificate of the strict order of the poset, so equal
/// certificates mean order-isomorphic spectra.
CanonicalCert prim_cert(const PrimPoset& prim, std::size_t cap = kDefaultVertexCap);

inline constexpr std::size_t kHereditaryCap = 20;

/// Hereditary saturated vertex sets with their strict inclusion pairs.
struct HereditaryLattice {
  std::vector<Mask> sets;  // SizeLexLess order, ∅ first
  std::vector<Edge> inclusions;
};

/// Grows sets by closing one added vertex at a time (every closed set is
/// reached from ∅ this way). Throws CapExceeded above `cap` vertices.
HereditaryLattice hereditary_saturated_sets(const DiGraph& g, std::size_t cap = kHereditaryCap);

}  // namespace coverinv
