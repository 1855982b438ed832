#include "coverinv/cstar.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "coverinv/error.hpp"

namespace coverinv {
namespace {

void check_vertex_cap(const DiGraph& g, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaskBits);
  if (g.vertex_count() > limit) throw_cap_exceeded("graph vertex count", g.vertex_count(), limit);
}

Mask successor_mask(const DiGraph& g, std::size_t v) {
  Mask m = 0;
  for (std::size_t w : g.successors(v)) m |= bit(w);
  return m;
}

}  // namespace

std::string BlockDecomposition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + std::to_string(blocks[i]);
  return s;
}

BlockDecomposition block_decomposition(const DiGraph& g) {
  const auto order = topological_order(g);
  std::vector<std::uint64_t> into(g.vertex_count(), 1);
  for (std::size_t v : order) {
    for (std::size_t p : g.predecessors(v)) {
      if (into[v] > std::numeric_limits<std::uint64_t>::max() - into[p]) {
        throw Error(ErrorKind::CapExceeded, "path count exceeds 64 bits", {{"vertex", v}});
      }
      into[v] += into[p];
    }
  }
  BlockDecomposition out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) out.blocks.push_back(into[v]);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

std::string KPair::to_string() const {
  auto group = [](std::size_t rank, const std::vector<BigInt>& torsion) {
    std::string s;
    if (rank == 1) s = "Z";
    if (rank > 1) s = "Z^" + std::to_string(rank);
    for (const auto& t : torsion) s += (s.empty() ? "" : "+") + ("Z/" + t.str());
    return s.empty() ? std::string("0") : s;
  };
  return "K0=" + group(k0_rank, torsion) + ",K1=" + group(k1_rank, {});
}

bool operator<(const KPair& a, const KPair& b) {
  if (a.k0_rank != b.k0_rank) return a.k0_rank < b.k0_rank;
  if (a.torsion != b.torsion) return a.torsion < b.torsion;
  return a.k1_rank < b.k1_rank;
}

IntMatrix k_theory_matrix(const DiGraph& g) {
  std::vector<std::size_t> regular;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!g.is_sink(v)) regular.push_back(v);
  IntMatrix m(g.vertex_count(), regular.size());
  for (std::size_t j = 0; j < regular.size(); ++j) {
    const std::size_t v = regular[j];
    for (std::size_t w : g.successors(v)) m(w, j) += 1;
    m(v, j) -= 1;
  }
  return m;
}

KPair k_theory(const DiGraph& g) {
  const IntMatrix m = k_theory_matrix(g);
  KPair out;
  if (m.cols() == 0) {
    out.k0_rank = m.rows();
    return out;
  }
  const auto snf = smith_normal_form(m);
  const auto factors = snf.invariant_factors();
  for (const auto& d : factors)
    if (d > 1) out.torsion.push_back(d);
  out.k0_rank = m.rows() - factors.size();
  out.k1_rank = m.cols() - factors.size();
  return out;
}

std::vector<Mask> maximal_tails(const DiGraph& g, std::size_t cap) {
  check_vertex_cap(g, cap);
  const auto order = topological_order(g);
  std::vector<Mask> ancestors(g.vertex_count(), 0);
  for (std::size_t v : order) {
    ancestors[v] |= bit(v);
    for (std::size_t w : g.successors(v)) ancestors[w] |= ancestors[v];
  }
  std::vector<Mask> tails;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) tails.push_back(ancestors[v]);
  std::sort(tails.begin(), tails.end(), SizeLexLess{});
  return tails;
}

PrimPoset prim_space(const DiGraph& g, std::size_t cap) {
  PrimPoset p;
  p.points = maximal_tails(g, cap);
  for (std::size_t i = 0; i < p.points.size(); ++i)
    for (std::size_t j = 0; j < p.points.size(); ++j)
      if (is_proper_subset(p.points[j], p.points[i])) p.order.emplace_back(i, j);
  return p;
}

CanonicalCert prim_cert(const PrimPoset& prim, std::size_t cap) {
  return canonical_cert(DiGraph(prim.points.size(), prim.order), cap);
}

HereditaryLattice hereditary_saturated_sets(const DiGraph& g, std::size_t cap) {
  if (g.vertex_count() > std::min(cap, kMaskBits)) {
    throw_cap_exceeded("graph vertex count", g.vertex_count(), std::min(cap, kMaskBits));
  }
  const std::size_t n = g.vertex_count();
  std::vector<Mask> succ(n);
  for (std::size_t v = 0; v < n; ++v) succ[v] = successor_mask(g, v);

  auto close = [&](Mask h) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = 0; v < n; ++v) {
        const bool inside = contains(h, v);
        if (inside && !is_subset(succ[v], h)) {
          h |= succ[v];
          changed = true;
        } else if (!inside && succ[v] != 0 && is_subset(succ[v], h)) {
          h |= bit(v);
          changed = true;
        }
      }
    }
    return h;
  };

  std::set<Mask> seen;
  std::deque<Mask> queue;
  const Mask start = close(0);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const Mask h = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (contains(h, v)) continue;
      const Mask next = close(h | bit(v));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }

  HereditaryLattice out;
  out.sets.assign(seen.begin(), seen.end());
  std::sort(out.sets.begin(), out.sets.end(), SizeLexLess{});
  for (std::size_t i = 0; i < out.sets.size(); ++i)
    for (std::size_t j = 0; j < out.sets.size(); ++j)
      if (is_proper_subset(out.sets[i], out.sets[j])) out.inclusions.emplace_back(i, j);
  return out;
}

}  // namespace coverinv
