#include "coverinv/io.hpp"

#include <fstream>
#include <sstream>

#include "coverinv/error.hpp"

namespace coverinv {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed ") + what + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object holding '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) bad("missing field '" + std::string(key) + "'");
  return *it;
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) bad("field '" + std::string(key) + "' must be an array");
  return a;
}

std::string point_name(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  bad("point identifiers must be strings or integers, got " + j.dump());
}

std::vector<std::string> point_list(const json& j) {
  if (!j.is_array()) bad("expected an array of points, got " + j.dump());
  std::vector<std::string> out;
  for (const auto& p : j) out.push_back(point_name(p));
  return out;
}

std::vector<std::vector<std::string>> set_list(const json& j) {
  if (!j.is_array()) bad("expected an array of point sets");
  std::vector<std::vector<std::string>> out;
  for (const auto& s : j) out.push_back(point_list(s));
  return out;
}

std::string rational_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  bad("rationals are written as strings \"p/q\" or integers, got " + j.dump());
}

json index_list(Mask m) {
  json a = json::array();
  for (std::size_t i : indices_of(m)) a.push_back(i + 1);
  return a;
}

json vertex_list(Mask m) {
  json a = json::array();
  for (std::size_t i : indices_of(m)) a.push_back(i);
  return a;
}

json edge_list(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const auto& [u, v] : edges) a.push_back({u, v});
  return a;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path, {{"path", path}});
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what(), {{"path", path}, {"byte", e.byte}});
  }
}

FiniteSpace space_from_json(const json& doc) {
  return guarded("space", [&] {
    auto points = point_list(field(doc, "points"));
    if (doc.contains("opens")) return validate_topology(std::move(points), set_list(doc.at("opens")));
    if (doc.contains("subbasis")) return generate_topology(std::move(points), set_list(doc.at("subbasis")));
    bad("a space needs 'opens' or 'subbasis'");
  });
}

json to_json(const FiniteSpace& space) {
  json opens = json::array();
  for (Mask m : space.opens()) opens.push_back(space.names_of(m));
  return {{"points", space.points()}, {"opens", opens}};
}

std::optional<Cover> cover_from_json(const FiniteSpace& space, const json& doc) {
  if (!doc.is_object() || !doc.contains("cover")) return std::nullopt;
  return guarded("cover", [&] {
    std::vector<Mask> members;
    for (const auto& names : set_list(doc.at("cover"))) members.push_back(space.mask_of(names));
    return std::optional<Cover>(make_cover(space, std::move(members)));
  });
}

json to_json(const FiniteSpace& space, const Cover& cover) {
  json members = json::array();
  for (Mask m : cover.members) members.push_back(space.names_of(m));
  return members;
}

IntervalDomain domain_from_json(const json& j) {
  return guarded("domain", [&] {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "segment") {
      return IntervalDomain::segment(parse_rational(rational_text(field(j, "lo"))),
                                     parse_rational(rational_text(field(j, "hi"))));
    }
    if (kind == "line") return IntervalDomain::line();
    if (kind == "circle") {
      const Rational c = j.contains("circumference") ? parse_rational(rational_text(j.at("circumference"))) : 1;
      if (!(c > 0)) bad("circle circumference must be positive");
      return IntervalDomain::circle(c);
    }
    bad("unknown domain kind '" + kind + "'");
  });
}

json to_json(const IntervalDomain& d) {
  switch (d.kind) {
    case DomainKind::Segment: return {{"kind", "segment"}, {"lo", to_string(d.lo)}, {"hi", to_string(d.hi)}};
    case DomainKind::Line: return {{"kind", "line"}};
    case DomainKind::Circle: return {{"kind", "circle"}, {"circumference", to_string(d.circumference)}};
  }
  return {};
}

IntervalSpec interval_spec_from_json(const json& doc) {
  return guarded("interval cover", [&] {
    IntervalSpec spec;
    spec.domain = domain_from_json(field(doc, "domain"));
    for (const auto& m : array_field(doc, "members")) {
      Interval iv;
      iv.lo = parse_ext_rational(rational_text(field(m, "lo")));
      iv.hi = parse_ext_rational(rational_text(field(m, "hi")));
      if (m.contains("closed_lo")) iv.closed_lo = m.at("closed_lo").get<bool>();
      spec.members.push_back(std::move(iv));
    }
    validate_interval_spec(spec);
    return spec;
  });
}

json to_json(const IntervalSpec& spec) {
  json members = json::array();
  for (const auto& m : spec.members) {
    json j = {{"lo", to_string(m.lo)}, {"hi", to_string(m.hi)}};
    if (m.closed_lo) j["closed_lo"] = true;
    members.push_back(std::move(j));
  }
  return {{"domain", to_json(spec.domain)}, {"members", members}};
}

AxisAlignedSpec axis_spec_from_json(const json& doc) {
  return guarded("plane cover", [&] {
    AxisAlignedSpec spec;
    for (const auto& region : array_field(doc, "members")) {
      if (!region.is_array()) bad("a plane region is an array of constraints");
      AxisRegion r;
      for (const auto& c : region) {
        AxisConstraint k;
        const std::string var = field(c, "var").get<std::string>();
        const std::string op = field(c, "op").get<std::string>();
        if (var == "x") {
          k.axis = AxisConstraint::Axis::X;
        } else if (var == "y") {
          k.axis = AxisConstraint::Axis::Y;
        } else {
          bad("constraint variable must be x or y, got '" + var + "'");
        }
        if (op == "<") {
          k.op = AxisConstraint::Op::Less;
        } else if (op == ">") {
          k.op = AxisConstraint::Op::Greater;
        } else {
          bad("constraint operator must be < or >, got '" + op + "'");
        }
        k.bound = parse_rational(rational_text(field(c, "c")));
        r.push_back(std::move(k));
      }
      spec.members.push_back(std::move(r));
    }
    return spec;
  });
}

json to_json(const AxisAlignedSpec& spec) {
  json members = json::array();
  for (const auto& region : spec.members) {
    json r = json::array();
    for (const auto& c : region) {
      r.push_back({{"var", c.axis == AxisConstraint::Axis::X ? "x" : "y"},
                   {"op", c.op == AxisConstraint::Op::Less ? "<" : ">"},
                   {"c", to_string(c.bound)}});
    }
    members.push_back(std::move(r));
  }
  return {{"members", members}};
}

Side side_from_json(const json& doc) {
  if (!doc.is_object()) bad("input document must be a JSON object");
  if (doc.contains("points")) return Side{space_from_json(doc)};
  if (doc.contains("domain")) {
    if (doc.contains("members")) return Side{interval_spec_from_json(doc)};
    return Side{domain_from_json(doc.at("domain"))};
  }
  if (doc.contains("members")) return Side{axis_spec_from_json(doc)};
  bad("input is neither a space, an interval family nor a plane cover");
}

json to_json(const Side& side) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntervalDomain>) {
          return {{"domain", to_json(v)}};
        } else {
          return to_json(v);
        }
      },
      side.value);
}

json to_json(const HPartition& p) {
  json classes = json::array();
  for (Mask c : p.classes) classes.push_back(index_list(c));
  return {{"members", p.member_count}, {"classes", classes}, {"source", p.source}};
}

json to_json(const DiGraph& g) {
  json j = {{"n", g.vertex_count()}, {"edges", edge_list(g.edges())}};
  if (g.has_labels()) {
    json labels = json::array();
    for (const auto& l : g.labels()) {
      json one = json::array();
      for (std::size_t i : l) one.push_back(i + 1);
      labels.push_back(std::move(one));
    }
    j["labels"] = std::move(labels);
  }
  return j;
}

DiGraph digraph_from_json(const json& doc) {
  return guarded("graph", [&] {
    const auto n = field(doc, "n").get<std::size_t>();
    if (n > kMaskBits) throw_cap_exceeded("graph vertex count", n, kMaskBits);
    std::vector<Edge> edges;
    for (const auto& e : array_field(doc, "edges")) {
      if (!e.is_array() || e.size() != 2) bad("an edge is a pair [from, to]");
      edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    }
    std::vector<std::vector<std::size_t>> labels;
    if (doc.contains("labels")) {
      for (const auto& l : doc.at("labels")) {
        std::vector<std::size_t> one;
        for (const auto& i : l) {
          const auto k = i.get<std::size_t>();
          if (k == 0) bad("labels hold 1-based member indices");
          one.push_back(k - 1);
        }
        labels.push_back(std::move(one));
      }
      if (labels.size() != n) bad("one label per vertex is required");
    }
    return DiGraph(n, std::move(edges), std::move(labels));
  });
}

json to_json(const BlockDecomposition& b) { return b.blocks; }

json to_json(const KPair& k) {
  json torsion = json::array();
  for (const auto& t : k.torsion) torsion.push_back(t.str());
  return {{"k0", {{"rank", k.k0_rank}, {"torsion", torsion}}}, {"k1", {{"rank", k.k1_rank}}}};
}

json to_json(const PrimPoset& p) {
  json points = json::array();
  for (Mask m : p.points) points.push_back(vertex_list(m));
  return {{"points", points}, {"order", edge_list(p.order)}};
}

json to_json(const HereditaryLattice& lattice) {
  json sets = json::array();
  for (Mask m : lattice.sets) sets.push_back(vertex_list(m));
  return {{"sets", sets}, {"inclusions", edge_list(lattice.inclusions)}};
}

json to_json(const Fingerprint& f) {
  return {{"graph", {{"cert", f.graph_cert.hex()}, {"vertices", f.vertex_count}, {"edges", f.edge_count}}},
          {"blocks", to_json(f.blocks)},
          {"ktheory", to_json(f.kpair)},
          {"prim", {{"points", f.prim.points.size()}, {"cert", f.prim_cert.hex()}}},
          {"source", f.source}};
}

json to_json(const FingerprintSet& s) {
  json items = json::array();
  for (const auto& [key, f] : s.elements) {
    json j = to_json(f);
    j["key"] = key;
    items.push_back(std::move(j));
  }
  return {{"level", to_string(s.level)}, {"scope", s.scope}, {"count", s.size()}, {"fingerprints", items}};
}

}  // namespace coverinv
