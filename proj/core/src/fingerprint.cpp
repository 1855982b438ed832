#include "coverinv/fingerprint.hpp"

#include "coverinv/error.hpp"
#include "coverinv/hasse.hpp"
#include "coverinv/space.hpp"

namespace coverinv {

std::string_view to_string(Level level) noexcept {
  switch (level) {
    case Level::Graph: return "graph";
    case Level::CStar: return "cstar";
    case Level::KTheory: return "ktheory";
  }
  return "unknown";
}

Level parse_level(std::string_view text) {
  if (text == "graph") return Level::Graph;
  if (text == "cstar") return Level::CStar;
  if (text == "ktheory") return Level::KTheory;
  throw Error(ErrorKind::InvalidArgument, "unknown level '" + std::string(text) + "'",
              {{"expected", {"graph", "cstar", "ktheory"}}});
}

Fingerprint fingerprint_of_graph(const DiGraph& g, std::size_t vertex_cap) {
  Fingerprint f;
  f.graph_cert = canonical_cert(g, vertex_cap);
  f.blocks = block_decomposition(g);
  f.kpair = k_theory(g);
  f.prim = prim_space(g, vertex_cap);
  f.prim_cert = prim_cert(f.prim, vertex_cap);
  f.vertex_count = g.vertex_count();
  f.edge_count = g.edge_count();
  return f;
}

Fingerprint fingerprint_of_partition(const HPartition& p, std::size_t vertex_cap) {
  Fingerprint f = fingerprint_of_graph(hasse_digraph(p), vertex_cap);
  f.source = p.source;
  return f;
}

Fingerprint fingerprint_of_cover(const FiniteSpace& space, const Cover& cover, std::size_t vertex_cap) {
  return fingerprint_of_partition(hpartition_of_cover(space, cover), vertex_cap);
}

std::string level_key(const Fingerprint& f, Level level) {
  switch (level) {
    case Level::Graph: return "graph:" + f.graph_cert.hex();
    case Level::CStar: return "cstar:" + f.blocks.to_string() + "|" + f.prim_cert.hex();
    case Level::KTheory: return "ktheory:" + f.kpair.to_string();
  }
  return {};
}

void FingerprintSet::insert(const Fingerprint& f) { elements.try_emplace(level_key(f, level), f); }

}  // namespace coverinv
