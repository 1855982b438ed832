#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace coverinv::oracle {
namespace {

BigInt floor_of(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::vector<Mask> sorted_classes(std::vector<Mask> v) {
  std::sort(v.begin(), v.end(), SizeLexLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Mask> reach_masks(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Mask> reach(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    Mask seen = bit(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : g.successors(v)) {
        if (!contains(seen, w)) {
          seen |= bit(w);
          stack.push_back(w);
        }
      }
    }
    reach[s] = seen;
  }
  return reach;
}

std::vector<Rational> sample_line(std::vector<Rational> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.empty()) return {Rational(0)};
  std::vector<Rational> pts{cuts.front() - 1};
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    pts.push_back(cuts[i]);
    if (i + 1 < cuts.size()) pts.push_back((cuts[i] + cuts[i + 1]) / 2);
  }
  pts.push_back(cuts.back() + 1);
  return pts;
}

}  // namespace

bool brute_isomorphic(const DiGraph& a, const DiGraph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges()) {
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::set<Edge> transitive_reduction_of_inclusion(const std::vector<Mask>& masks) {
  const std::size_t n = masks.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (masks[i] & masks[j]) == masks[i]) adj[i].push_back(j);

  std::set<Edge> kept;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : adj[i]) {
      // Is j reachable from i through some other neighbour of i?
      bool longer = false;
      std::vector<bool> seen(n, false);
      std::deque<std::size_t> queue;
      for (std::size_t k : adj[i]) {
        if (k != j) {
          seen[k] = true;
          queue.push_back(k);
        }
      }
      while (!queue.empty() && !longer) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adj[v]) {
          if (w == j) longer = true;
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      }
      if (!longer) kept.emplace(i, j);
    }
  }
  return kept;
}

std::vector<Mask> tails_by_axioms(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto reach = reach_masks(g);
  std::vector<Mask> ancestors(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (contains(reach[v], w)) ancestors[w] |= bit(v);
  std::vector<Mask> succ(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w : g.successors(v)) succ[v] |= bit(w);

  std::vector<Mask> out;
  for (Mask t = 1; t <= low_bits(n); ++t) {
    bool ok = true;
    for (std::size_t w = 0; w < n && ok; ++w) {
      if (!contains(t, w)) continue;
      if ((ancestors[w] & ~t) != 0) ok = false;                  // closed under predecessors
      if (ok && succ[w] != 0 && (succ[w] & t) == 0) ok = false;  // non-sinks emit into T
      for (std::size_t u = 0; u < n && ok; ++u) {
        if (contains(t, u) && (reach[u] & reach[w] & t) == 0) ok = false;  // downward directed
      }
    }
    if (ok) out.push_back(t);
  }
  return sorted_classes(out);
}

std::vector<Mask> hereditary_saturated_by_scan(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Mask> succ(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w : g.successors(v)) succ[v] |= bit(w);
  std::vector<Mask> out;
  for (Mask h = 0; h <= low_bits(n); ++h) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (contains(h, v) && (succ[v] & ~h) != 0) ok = false;
      if (!contains(h, v) && succ[v] != 0 && (succ[v] & ~h) == 0) ok = false;
    }
    if (ok) out.push_back(h);
    if (n == 64 && h == ~Mask{0}) break;
  }
  return sorted_classes(out);
}

std::vector<Cover> covers_by_subset_scan(const FiniteSpace& space) {
  std::vector<Mask> opens;
  for (Mask m : space.opens())
    if (m != 0) opens.push_back(m);
  std::vector<Cover> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << opens.size()); ++s) {
    Cover c;
    Mask u = 0;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if ((s >> i) & 1U) {
        c.members.push_back(opens[i]);
        u |= opens[i];
      }
    }
    if (u != space.whole()) continue;
    std::sort(c.members.begin(), c.members.end(), SizeLexLess{});
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> interval_classes_by_sampling(const IntervalSpec& spec) {
  const auto& d = spec.domain;
  std::vector<Mask> classes;
  if (d.kind == DomainKind::Circle) {
    const Rational& c = d.circumference;
    auto wrap = [&](const Rational& x) { return x - c * Rational(floor_of(x / c)); };
    std::vector<Rational> cuts;
    for (const auto& m : spec.members) {
      cuts.push_back(wrap(m.lo.value()));
      cuts.push_back(wrap(m.hi.value()));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Rational> pts;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      pts.push_back(cuts[i]);
      const Rational next = i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + c;
      pts.push_back(wrap((cuts[i] + next) / 2));
    }
    for (const auto& x : pts) {
      Mask h = 0;
      for (std::size_t j = 0; j < spec.members.size(); ++j) {
        const Rational lo = spec.members[j].lo.value();
        const Rational hi = spec.members[j].hi.value();
        if (hi - lo > c) {
          h |= bit(j);
          continue;
        }
        const BigInt k0 = floor_of((lo - x) / c);
        for (BigInt k = k0 - 1; k <= k0 + 2; ++k) {
          const Rational y = x + c * Rational(k);
          if (lo < y && y < hi) h |= bit(j);
        }
      }
      classes.push_back(h);
    }
    return sorted_classes(classes);
  }

  std::vector<Rational> cuts;
  for (const auto& m : spec.members) {
    if (m.lo.finite()) cuts.push_back(m.lo.value());
    if (m.hi.finite()) cuts.push_back(m.hi.value());
  }
  if (d.kind == DomainKind::Segment) {
    cuts.push_back(d.lo);
    cuts.push_back(d.hi);
  }
  for (const auto& x : sample_line(cuts)) {
    if (d.kind == DomainKind::Segment && (x < d.lo || x >= d.hi)) continue;
    Mask h = 0;
    for (std::size_t j = 0; j < spec.members.size(); ++j) {
      const auto& m = spec.members[j];
      const ExtRational ex(x);
      const bool above = m.closed_lo ? m.lo <= ex : m.lo < ex;
      if (above && ex < m.hi) h |= bit(j);
    }
    classes.push_back(h);
  }
  return sorted_classes(classes);
}

std::vector<Mask> axis_classes_by_sampling(const AxisAlignedSpec& spec) {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (const auto& region : spec.members)
    for (const auto& c : region) (c.axis == AxisConstraint::Axis::X ? xs : ys).push_back(c.bound);
  std::vector<Mask> classes;
  for (const auto& x : sample_line(xs)) {
    for (const auto& y : sample_line(ys)) {
      Mask h = 0;
      for (std::size_t i = 0; i < spec.members.size(); ++i) {
        bool in = true;
        for (const auto& c : spec.members[i]) {
          const Rational& v = c.axis == AxisConstraint::Axis::X ? x : y;
          in = in && (c.op == AxisConstraint::Op::Less ? v < c.bound : v > c.bound);
        }
        if (in) h |= bit(i);
      }
      classes.push_back(h);
    }
  }
  return sorted_classes(classes);
}

namespace {

void all_paths(const DiGraph& g, std::vector<std::size_t>& path, std::vector<std::vector<std::size_t>>& out) {
  out.push_back(path);
  for (std::size_t w : g.successors(path.back())) {
    path.push_back(w);
    all_paths(g, path, out);
    path.pop_back();
  }
}

std::vector<std::vector<std::size_t>> paths_into_sinks(const DiGraph& g) {
  std::vector<std::vector<std::size_t>> every;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::size_t> path{v};
    all_paths(g, path, every);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& p : every)
    if (g.is_sink(p.back())) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<std::uint64_t> blocks_by_path_search(const DiGraph& g) {
  std::vector<std::uint64_t> count(g.vertex_count(), 0);
  for (const auto& p : paths_into_sinks(g)) ++count[p.back()];
  std::vector<std::uint64_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) out.push_back(count[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t path_pairs_sharing_sink(const DiGraph& g) {
  const auto paths = paths_into_sinks(g);
  std::uint64_t pairs = 0;
  for (const auto& p : paths)
    for (const auto& q : paths)
      if (p.back() == q.back()) ++pairs;
  return pairs;
}

BigInt cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, mk = 0; k < n; ++k)
        if (k != c) minor(r - 1, mk++) = m(r, k);
    const BigInt term = m(0, c) * cofactor_determinant(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

DiGraph random_digraph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && coin(rng)) edges.emplace_back(u, v);
  return DiGraph(n, std::move(edges));
}

DiGraph random_dag(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return DiGraph(n, std::move(edges));
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

FiniteSpace random_space(Rng& rng, std::size_t max_points, std::size_t max_nonempty_opens) {
  std::uniform_int_distribution<std::size_t> points_dist(1, max_points);
  std::uniform_int_distribution<std::size_t> subbasis_dist(0, 4);
  while (true) {
    const std::size_t k = points_dist(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
    std::uniform_int_distribution<Mask> set_dist(1, low_bits(k));
    std::vector<Mask> subbasis(subbasis_dist(rng));
    for (auto& s : subbasis) s = set_dist(rng);
    FiniteSpace space = generate_topology(names, subbasis);
    if (space.nonempty_opens().size() <= max_nonempty_opens) return space;
  }
}

FiniteSpace relabeled_space(const FiniteSpace& space, const std::vector<std::size_t>& perm) {
  std::vector<std::string> names(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) names[perm[i]] = "r_" + space.points()[i];
  std::vector<Mask> opens;
  for (Mask m : space.opens()) opens.push_back(image_of(m, perm));
  return validate_topology(std::move(names), std::move(opens));
}

DiGraph path_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return DiGraph(k, std::move(edges));
}

DiGraph from_edges(std::size_t n, std::vector<Edge> edges) { return DiGraph(n, std::move(edges)); }

}  // namespace coverinv::oracle
