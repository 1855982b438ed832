#include "coverinv/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "coverinv/error.hpp"
#include "coverinv/mask.hpp"

namespace coverinv {
namespace {

using Colouring = std::vector<std::size_t>;
constexpr std::size_t kHardVertexLimit = 64;
constexpr std::size_t kNodeBudget = 2'000'000;

/// Replaces each key by its rank among the distinct keys.
template <typename Key>
std::size_t rank_keys(const std::vector<Key>& keys, Colouring& out) {
  std::vector<Key> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  out.resize(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    out[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) - distinct.begin());
  }
  return distinct.size();
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

class Canonicaliser {
 public:
  explicit Canonicaliser(const DiGraph& g) : g_(g), n_(g.vertex_count()), rows_(n_, 0) {
    for (const auto& [u, v] : g.edges()) rows_[u] |= bit(v);
    compute_twins();
  }

  CanonicalForm run() {
    Colouring c = initial_colouring();
    refine(c);
    std::vector<std::size_t> prefix;
    search(c, prefix);

    CanonicalForm form;
    form.position = best_position_;
    form.cert.vertex_count = n_;
    auto& enc = form.cert.encoding;
    enc.push_back(static_cast<char>((n_ >> 8) & 0xFF));
    enc.push_back(static_cast<char>(n_ & 0xFF));
    const std::size_t row_bytes = (n_ + 7) / 8;
    for (Mask row : best_rows_) {
      for (std::size_t b = 0; b < row_bytes; ++b) enc.push_back(static_cast<char>((row >> (8 * b)) & 0xFF));
    }
    return form;
  }

 private:
  Colouring initial_colouring() const {
    std::vector<std::size_t> level(n_, 0);
    if (!find_cycle(g_)) {
      for (auto v : topological_order(g_))
        for (auto w : g_.successors(v)) level[w] = std::max(level[w], level[v] + 1);
    }
    std::vector<std::array<std::size_t, 3>> keys(n_);
    for (std::size_t v = 0; v < n_; ++v) keys[v] = {level[v], g_.in_degree(v), g_.out_degree(v)};
    Colouring c;
    rank_keys(keys, c);
    return c;
  }

  void refine(Colouring& c) const {
    std::size_t cells = n_ == 0 ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    std::vector<std::vector<std::size_t>> sig(n_);
    Colouring next;
    while (true) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(c[v]);
        s.push_back(g_.out_degree(v));
        const std::size_t mark = s.size();
        for (auto w : g_.successors(v)) s.push_back(c[w]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
        const std::size_t mark2 = s.size();
        for (auto w : g_.predecessors(v)) s.push_back(c[w]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark2), s.end());
      }
      const std::size_t now = rank_keys(sig, next);
      c.swap(next);
      if (now == cells) return;
      cells = now;
    }
  }

  Colouring individualise(const Colouring& c, std::size_t v) const {
    std::vector<std::pair<std::size_t, std::size_t>> keys(n_);
    for (std::size_t u = 0; u < n_; ++u) keys[u] = {c[u], u == v ? 0 : 1};
    Colouring out;
    rank_keys(keys, out);
    refine(out);
    return out;
  }

  // Vertices with identical neighbourhoods (apart from each other) can be
  // swapped by an automorphism fixing every other vertex.
  void compute_twins() {
    twin_class_.assign(n_, 0);
    std::vector<std::size_t> reps;
    std::vector<Mask> in_rows(n_, 0);
    for (const auto& [u, v] : g_.edges()) in_rows[v] |= bit(u);
    auto twins = [&](std::size_t u, std::size_t v) {
      const Mask uv = bit(u) | bit(v);
      return (rows_[u] & ~uv) == (rows_[v] & ~uv) && (in_rows[u] & ~uv) == (in_rows[v] & ~uv) &&
             contains(rows_[u], v) == contains(rows_[v], u);
    };
    for (std::size_t v = 0; v < n_; ++v) {
      bool placed = false;
      for (std::size_t k = 0; k < reps.size() && !placed; ++k) {
        bool all = true;
        for (std::size_t u = 0; u < v && all; ++u)
          if (twin_class_[u] == k && !twins(u, v)) all = false;
        if (all) {
          twin_class_[v] = k;
          placed = true;
        }
      }
      if (!placed) {
        twin_class_[v] = reps.size();
        reps.push_back(v);
      }
    }
  }

  UnionFind orbits(const std::vector<std::size_t>& prefix) const {
    UnionFind uf(n_);
    Mask fixed = 0;
    for (auto p : prefix) fixed |= bit(p);
    std::map<std::size_t, std::size_t> first_of_class;
    for (std::size_t v = 0; v < n_; ++v) {
      if (contains(fixed, v)) continue;
      auto [it, inserted] = first_of_class.emplace(twin_class_[v], v);
      if (!inserted) uf.unite(v, it->second);
    }
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (auto p : prefix)
        if (gamma[p] != p) fixes = false;
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) uf.unite(v, gamma[v]);
    }
    return uf;
  }

  void search(const Colouring& c, std::vector<std::size_t>& prefix) {
    if (++nodes_ > kNodeBudget) throw_cap_exceeded("canonical search nodes", nodes_, kNodeBudget);

    std::vector<std::size_t> cell_size(n_, 0);
    for (auto col : c) ++cell_size[col];
    std::size_t target = n_;
    for (std::size_t col = 0; col < n_; ++col) {
      if (cell_size[col] > 1) {
        target = col;
        break;
      }
    }
    if (target == n_) {
      leaf(c);
      return;
    }

    std::vector<std::size_t> explored;
    for (std::size_t v = 0; v < n_; ++v) {
      if (c[v] != target) continue;
      if (!explored.empty()) {
        UnionFind uf = orbits(prefix);
        const bool redundant = std::any_of(explored.begin(), explored.end(),
                                           [&](std::size_t u) { return uf.find(u) == uf.find(v); });
        if (redundant) continue;
      }
      Colouring child = individualise(c, v);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  void leaf(const Colouring& position) {
    std::vector<std::size_t> inverse(n_);
    for (std::size_t v = 0; v < n_; ++v) inverse[position[v]] = v;
    std::vector<Mask> rows(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (auto w : g_.successors(inverse[i])) rows[i] |= bit(position[w]);
    }
    if (!have_best_ || rows < best_rows_) {
      have_best_ = true;
      best_rows_ = std::move(rows);
      best_position_ = position;
      best_inverse_ = std::move(inverse);
      return;
    }
    if (rows == best_rows_) {
      std::vector<std::size_t> gamma(n_);
      bool identity = true;
      for (std::size_t v = 0; v < n_; ++v) {
        gamma[v] = best_inverse_[position[v]];
        identity = identity && gamma[v] == v;
      }
      if (!identity) automorphisms_.push_back(std::move(gamma));
    }
  }

  const DiGraph& g_;
  std::size_t n_;
  std::vector<Mask> rows_;
  std::vector<std::size_t> twin_class_;
  std::vector<std::vector<std::size_t>> automorphisms_;
  bool have_best_ = false;
  std::vector<Mask> best_rows_;
  std::vector<std::size_t> best_position_;
  std::vector<std::size_t> best_inverse_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::string CanonicalCert::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(encoding.size() * 2);
  for (unsigned char ch : encoding) {
    out.push_back(kDigits[ch >> 4]);
    out.push_back(kDigits[ch & 0xF]);
  }
  return out;
}

CanonicalCert CanonicalCert::from_hex(const std::string& hex) {
  auto nibble = [&](char ch) -> unsigned {
    if (ch >= '0' && ch <= '9') return static_cast<unsigned>(ch - '0');
    if (ch >= 'a' && ch <= 'f') return static_cast<unsigned>(ch - 'a' + 10);
    if (ch >= 'A' && ch <= 'F') return static_cast<unsigned>(ch - 'A' + 10);
    throw Error(ErrorKind::ParseError, "bad hex digit in certificate", {{"text", hex}});
  };
  if (hex.size() % 2 != 0 || hex.size() < 4) throw Error(ErrorKind::ParseError, "bad certificate length", {{"text", hex}});
  CanonicalCert cert;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    cert.encoding.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  }
  cert.vertex_count = (static_cast<unsigned char>(cert.encoding[0]) << 8) | static_cast<unsigned char>(cert.encoding[1]);
  return cert;
}

CanonicalForm canonical_form(const DiGraph& g, std::size_t cap) {
  const std::size_t limit = std::min(cap, kHardVertexLimit);
  if (g.vertex_count() > limit) throw_cap_exceeded("graph vertex count", g.vertex_count(), limit);
  return Canonicaliser(g).run();
}

CanonicalCert canonical_cert(const DiGraph& g, std::size_t cap) { return canonical_form(g, cap).cert; }

bool is_isomorphism(const DiGraph& a, const DiGraph& b, const std::vector<std::size_t>& map) {
  if (a.vertex_count() != b.vertex_count() || map.size() != a.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<bool> hit(map.size(), false);
  for (auto m : map) {
    if (m >= map.size() || hit[m]) return false;
    hit[m] = true;
  }
  std::vector<std::size_t> inverse(map.size());
  for (std::size_t v = 0; v < map.size(); ++v) inverse[map[v]] = v;
  const bool forward = std::all_of(a.edges().begin(), a.edges().end(),
                                   [&](const Edge& e) { return b.has_edge(map[e.first], map[e.second]); });
  const bool backward = std::all_of(b.edges().begin(), b.edges().end(),
                                    [&](const Edge& e) { return a.has_edge(inverse[e.first], inverse[e.second]); });
  return forward && backward;
}

IsomorphismResult is_isomorphic(const DiGraph& a, const DiGraph& b, std::size_t cap) {
  const CanonicalForm fa = canonical_form(a, cap);
  const CanonicalForm fb = canonical_form(b, cap);
  IsomorphismResult result;
  if (fa.cert != fb.cert) return result;
  std::vector<std::size_t> inverse_b(b.vertex_count());
  for (std::size_t v = 0; v < b.vertex_count(); ++v) inverse_b[fb.position[v]] = v;
  result.witness.resize(a.vertex_count());
  for (std::size_t v = 0; v < a.vertex_count(); ++v) result.witness[v] = inverse_b[fa.position[v]];
  if (!is_isomorphism(a, b, result.witness)) {
    throw Error(ErrorKind::InvalidArgument, "internal: equal certificates but witness failed verification");
  }
  result.isomorphic = true;
  return result;
}

}  // namespace coverinv
