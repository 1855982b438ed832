#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "coverinv/arrangement.hpp"
#include "coverinv/cstar.hpp"
#include "coverinv/hasse.hpp"
#include "coverinv/io.hpp"

namespace coverinv::cli {
namespace {

const char* const kCommands[] = {"validate", "hclasses", "graph", "cstar",   "ktheory",
                                 "prim",     "pg",       "compare", "certify", "enumerate"};

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorKind::InvalidArgument, message); }

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text.front() == '-' || v == 0) {
    invalid(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

bool is_graph_doc(const json& doc) { return doc.is_object() && doc.contains("n") && doc.contains("edges"); }

struct Source {
  json doc;
  Side side;
};

Source load(const std::string& path, const char* flag) {
  if (path.empty()) invalid(std::string(flag) + " is required");
  json doc = read_json_file(path);
  if (is_graph_doc(doc)) return {doc, Side{}};
  Side side = side_from_json(doc);
  return {std::move(doc), std::move(side)};
}

[[noreturn]] void graph_not_allowed() { invalid("this command needs a space or a cover, not a graph file"); }

HPartition partition_of(const Source& s) {
  if (is_graph_doc(s.doc)) graph_not_allowed();
  if (const auto* space = std::get_if<FiniteSpace>(&s.side.value)) {
    const auto cover = cover_from_json(*space, s.doc);
    if (!cover) invalid("the space file has no \"cover\" entry");
    return hpartition_of_cover(*space, *cover);
  }
  if (const auto* spec = std::get_if<IntervalSpec>(&s.side.value)) return hclasses_of_intervals(*spec);
  if (const auto* spec = std::get_if<AxisAlignedSpec>(&s.side.value)) return hclasses_axis2d(*spec);
  invalid("an interval domain without members is a family, not a cover");
}

DiGraph graph_of(const Source& s) {
  if (is_graph_doc(s.doc)) return digraph_from_json(s.doc);
  return hasse_digraph(partition_of(s));
}

std::string mask_text(Mask m, std::size_t offset) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : indices_of(m)) {
    s += (first ? "" : ",") + std::to_string(i + offset);
    first = false;
  }
  return s + "}";
}

std::string algebra_text(const BlockDecomposition& b) {
  std::string s;
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    s += (i ? " + " : "") + (b.blocks[i] == 1 ? std::string("C") : "M" + std::to_string(b.blocks[i]) + "(C)");
  }
  return s;
}

std::pair<std::size_t, std::size_t> range_of(const RunConfig& c, bool required) {
  if (c.n_range) return *c.n_range;
  if (c.n) return {*c.n, *c.n};
  if (required) invalid("--n or --n-range is required");
  return {1, c.caps.cover};
}

FingerprintSet pg_of(const Source& s, std::size_t n, const RunConfig& c) {
  if (is_graph_doc(s.doc)) graph_not_allowed();
  const Side& side = s.side;
  if (const auto* space = std::get_if<FiniteSpace>(&side.value)) return pg_n(*space, n, c.level, c.caps);
  if (const auto* domain = std::get_if<IntervalDomain>(&side.value)) return pg_n(*domain, n, c.level, c.caps);
  invalid("pg and compare need a finite space or an interval domain, got " + side.family());
}

struct Result {
  json body;
  std::string text;  // used for text and dot output
  int code = kOk;
};

Result cmd_validate(const RunConfig& c) {
  const Source s = load(c.input, "--input");
  Result r;
  if (is_graph_doc(s.doc)) {
    const DiGraph g = digraph_from_json(s.doc);
    r.body = {{"valid", true}, {"kind", "graph"}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  } else if (const auto* space = std::get_if<FiniteSpace>(&s.side.value)) {
    r.body = to_json(*space);
    r.body["valid"] = true;
    r.body["kind"] = s.side.family();
    if (const auto cover = cover_from_json(*space, s.doc)) r.body["cover"] = to_json(*space, *cover);
  } else {
    if (std::holds_alternative<IntervalSpec>(s.side.value) || std::holds_alternative<AxisAlignedSpec>(s.side.value)) {
      (void)partition_of(s);  // checks the members really cover
    }
    r.body = {{"valid", true}, {"kind", s.side.family()}};
  }
  r.text = "valid " + r.body["kind"].get<std::string>() + "\n";
  return r;
}

Result cmd_hclasses(const RunConfig& c) {
  const HPartition p = partition_of(load(c.input, "--input"));
  Result r;
  r.body = to_json(p);
  r.body["count"] = p.size();
  for (Mask m : p.classes) r.text += mask_text(m, 1) + "\n";
  return r;
}

Result cmd_graph(const RunConfig& c) {
  const DiGraph g = graph_of(load(c.input, "--input"));
  Result r;
  r.body = to_json(g);
  r.body["cert"] = canonical_cert(g, c.caps.vertices).hex();
  if (c.format == Format::Text) {
    r.text = std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges\n";
    for (const auto& [u, v] : g.edges()) r.text += std::to_string(u) + " -> " + std::to_string(v) + "\n";
  } else {
    r.text = to_dot(g);
  }
  return r;
}

Result cmd_cstar(const RunConfig& c) {
  const DiGraph g = graph_of(load(c.input, "--input"));
  const BlockDecomposition b = block_decomposition(g);
  Result r;
  r.body = {{"blocks", to_json(b)}, {"algebra", algebra_text(b)}};
  if (g.vertex_count() <= kHereditaryCap) r.body["ideals"] = to_json(hereditary_saturated_sets(g));
  r.text = algebra_text(b) + "\n";
  return r;
}

Result cmd_ktheory(const RunConfig& c) {
  const KPair k = k_theory(graph_of(load(c.input, "--input")));
  return {to_json(k), k.to_string() + "\n"};
}

Result cmd_prim(const RunConfig& c) {
  const DiGraph g = graph_of(load(c.input, "--input"));
  const PrimPoset p = prim_space(g, c.caps.vertices);
  Result r;
  r.body = to_json(p);
  r.body["cert"] = prim_cert(p, c.caps.vertices).hex();
  for (Mask m : p.points) r.text += mask_text(m, 0) + "\n";
  return r;
}

std::string set_text(const FingerprintSet& s) {
  std::string t = "level " + std::string(to_string(s.level)) + ", " + s.scope + ": " + std::to_string(s.size()) +
                  " fingerprint(s)\n";
  for (const auto& [key, f] : s.elements) {
    t += "  " + std::to_string(f.vertex_count) + "v/" + std::to_string(f.edge_count) + "e  " + algebra_text(f.blocks) +
         "  " + f.kpair.to_string() + "\n";
  }
  return t;
}

Result cmd_pg(const RunConfig& c) {
  const Source s = load(c.input, "--input");
  if (is_graph_doc(s.doc)) graph_not_allowed();
  Result r;
  if (!c.n && !c.n_range) {
    const auto* space = std::get_if<FiniteSpace>(&s.side.value);
    if (!space) invalid("pg on an interval domain needs --n or --n-range");
    const FingerprintSet set = pg_all(*space, c.level, c.caps);
    return {to_json(set), set_text(set)};
  }
  const auto [lo, hi] = range_of(c, true);
  if (lo == hi) {
    const FingerprintSet set = pg_of(s, lo, c);
    return {to_json(set), set_text(set)};
  }
  r.body = {{"level", to_string(c.level)}, {"sets", json::array()}};
  for (std::size_t n = lo; n <= hi; ++n) {
    const FingerprintSet set = pg_of(s, n, c);
    r.body["sets"].push_back(to_json(set));
    r.text += set_text(set);
  }
  return r;
}

Result cmd_compare(const RunConfig& c) {
  const Source a = load(c.input, "--input");
  const Source b = load(c.input_b, "--input-b");
  const auto [lo, hi] = range_of(c, true);
  Result r;
  bool all = true;
  r.body = {{"level", to_string(c.level)}, {"results", json::array()}};
  for (std::size_t n = lo; n <= hi; ++n) {
    const bool eq = wl_compare(pg_of(a, n, c), pg_of(b, n, c));
    all = all && eq;
    r.body["results"].push_back({{"n", n}, {"equal", eq}});
    r.text += "n=" + std::to_string(n) + (eq ? " equal\n" : " different\n");
  }
  r.body["equal"] = all;
  r.code = all ? kOk : kNegative;
  return r;
}

Result cmd_certify(const RunConfig& c) {
  Result r;
  if (c.replay) {
    if (c.input.empty()) invalid("--input is required");
    const ReplayResult rr = replay_certificate(read_json_file(c.input));
    r.body = {{"replay", rr.ok ? "ok" : "failed"}, {"reason", rr.reason}};
    r.text = std::string(rr.ok ? "replay ok" : "replay failed") + ": " + rr.reason + "\n";
    r.code = rr.ok ? kOk : kNegative;
    return r;
  }
  const Source a = load(c.input, "--input");
  const Source b = load(c.input_b, "--input-b");
  if (is_graph_doc(a.doc) || is_graph_doc(b.doc)) invalid("certify needs spaces or covers, not graphs");
  const auto [lo, hi] = range_of(c, false);
  const auto cert = nonhomeo_certificate(a.side, b.side, lo, hi, c.level, c.caps);
  if (!cert) {
    r.body = {{"verdict", "none-found"}, {"level", to_string(c.level)}, {"n_range", {lo, hi}}};
    r.text = "no separating fingerprint for n in " + std::to_string(lo) + ".." + std::to_string(hi) + "\n";
    r.code = kNegative;
    return r;
  }
  r.body = to_json(*cert);
  r.text = "not homeomorphic: n=" + std::to_string(cert->n) + ", witness on side " +
           (cert->witness_side == 0 ? "A" : "B") + " (" + cert->witness.source + ")\n";
  return r;
}

Result cmd_enumerate(const RunConfig& c) {
  const Source s = load(c.input, "--input");
  if (is_graph_doc(s.doc)) graph_not_allowed();
  Result r;
  if (const auto* space = std::get_if<FiniteSpace>(&s.side.value)) {
    CoverEnumerationLimits limits;
    limits.max_candidates = c.caps.cover_candidates;
    std::optional<std::size_t> n;
    if (c.n) n = c.n;
    json covers = json::array();
    for_each_cover(
        *space, n,
        [&](const Cover& cover) {
          covers.push_back(to_json(*space, cover));
          r.text += covers.back().dump() + "\n";
          return true;
        },
        limits);
    r.body = {{"count", covers.size()}, {"covers", covers}};
    return r;
  }
  const auto* domain = std::get_if<IntervalDomain>(&s.side.value);
  if (!domain) invalid("enumerate needs a finite space or an interval domain");
  if (!c.n) invalid("enumerating interval cover types needs --n");
  json types = json::array();
  for (const auto& p : enumerate_interval_cover_types(*domain, *c.n, c.caps.cover)) {
    types.push_back(to_json(p));
    r.text += p.source + "  " + std::to_string(p.size()) + " classes\n";
  }
  r.body = {{"count", types.size()}, {"types", types}};
  return r;
}

Result dispatch(const RunConfig& c) {
  if (c.command == "validate") return cmd_validate(c);
  if (c.command == "hclasses") return cmd_hclasses(c);
  if (c.command == "graph") return cmd_graph(c);
  if (c.command == "cstar") return cmd_cstar(c);
  if (c.command == "ktheory") return cmd_ktheory(c);
  if (c.command == "prim") return cmd_prim(c);
  if (c.command == "pg") return cmd_pg(c);
  if (c.command == "compare") return cmd_compare(c);
  if (c.command == "certify") return cmd_certify(c);
  return cmd_enumerate(c);
}

}  // namespace

void RunConfig::validate() const {
  bool known = false;
  for (const char* k : kCommands) known = known || command == k;
  if (!known) invalid("unknown command '" + command + "'");
  caps.validate();
  if (caps.vertices > kMaskBits) invalid("--cap-vertices is at most 64");
  if (n_range && (n_range->first == 0 || n_range->first > n_range->second)) invalid("--n-range must be lo..hi with 1 <= lo <= hi");
  if (format == Format::Dot && command != "graph") invalid("--format dot is only available for graph");
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return kParseError;
    case ErrorKind::CapExceeded: return kCapExceeded;
    case ErrorKind::NotACover: return kNotACover;
    case ErrorKind::NotAHomeomorphism: return kNotAHomeomorphism;
    case ErrorKind::MissingEmpty:
    case ErrorKind::MissingWhole:
    case ErrorKind::NotClosedUnderUnion:
    case ErrorKind::NotClosedUnderIntersection:
    case ErrorKind::DuplicatePoint: return kInvalidTopology;
    case ErrorKind::NotAcyclic: return kNotAcyclic;
    case ErrorKind::LevelMismatch: return kLevelMismatch;
    case ErrorKind::NotExhaustible: return kNotExhaustible;
    case ErrorKind::EmptyMember:
    case ErrorKind::InvalidSpec: return kInvalidSpec;
    case ErrorKind::InvalidArgument: return kInvalidArgument;
  }
  return kFailure;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "dot") return Format::Dot;
  if (text == "text") return Format::Text;
  invalid("--format must be json, dot or text, got '" + text + "'");
}

std::pair<std::size_t, std::size_t> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = parse_count(text, "--n-range");
    return {n, n};
  }
  const std::size_t lo = parse_count(text.substr(0, dots), "--n-range lower bound");
  const std::size_t hi = parse_count(text.substr(dots + 2), "--n-range upper bound");
  if (lo > hi) invalid("--n-range lower bound exceeds upper bound");
  return {lo, hi};
}

void apply_env_caps(Caps& caps) {
  if (const char* v = std::getenv("COVERINV_CAP_COVER"); v && *v) caps.cover = parse_count(v, "COVERINV_CAP_COVER");
  if (const char* v = std::getenv("COVERINV_CAP_VERTICES"); v && *v) {
    caps.vertices = parse_count(v, "COVERINV_CAP_VERTICES");
  }
}

int run(const RunConfig& config, std::ostream& out) {
  try {
    config.validate();
    Result r = dispatch(config);
    const Format format = config.format.value_or(config.command == "graph" ? Format::Dot : Format::Json);
    const std::string payload = format == Format::Json ? r.body.dump(2) + "\n" : r.text;
    if (config.out.empty()) {
      out << payload;
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + config.out, {{"path", config.out}});
      file << payload;
    }
    return r.code;
  } catch (const Error& e) {
    out << e.to_json().dump(2) << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    out << json{{"error", {{"kind", "Internal"}, {"message", e.what()}, {"detail", json::object()}}}}.dump(2) << "\n";
    return kFailure;
  }
}

}  // namespace coverinv::cli
