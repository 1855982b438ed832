#include <algorithm>

#include "coverinv/error.hpp"
#include "coverinv/invariants.hpp"
#include "coverinv/io.hpp"

namespace coverinv {
namespace {

/// The single fingerprint of a witness side, with its member count.
struct Witness {
  std::size_t members = 0;
  Fingerprint fingerprint;
};

std::optional<Witness> witness_of(const Side& s, const Caps& caps) {
  if (const auto* spec = std::get_if<IntervalSpec>(&s.value)) {
    return Witness{spec->members.size(), fingerprint_of_partition(hclasses_of_intervals(*spec), caps.vertices)};
  }
  if (const auto* spec = std::get_if<AxisAlignedSpec>(&s.value)) {
    return Witness{spec->members.size(), fingerprint_of_partition(hclasses_axis2d(*spec), caps.vertices)};
  }
  return std::nullopt;
}

/// Fingerprints of `s` at cover size n, or nullopt when the side says nothing
/// about n (a witness cover of another size).
std::optional<FingerprintSet> fingerprints_at(const Side& s, const std::optional<Witness>& w, std::size_t n,
                                              Level level, const Caps& caps) {
  if (const auto* space = std::get_if<FiniteSpace>(&s.value)) return pg_n(*space, n, level, caps);
  if (const auto* domain = std::get_if<IntervalDomain>(&s.value)) return pg_n(*domain, n, level, caps);
  if (!w || w->members != n) return std::nullopt;
  FingerprintSet out{level, "n=" + std::to_string(n), {}};
  out.insert(w->fingerprint);
  return out;
}

std::vector<std::string> keys_of(const FingerprintSet& s) {
  std::vector<std::string> out;
  for (const auto& e : s.elements) out.push_back(e.first);
  return out;
}

std::string side_name(int side) { return side == 0 ? "A" : "B"; }

}  // namespace

std::optional<Certificate> nonhomeo_certificate(const Side& a, const Side& b, std::size_t n_lo, std::size_t n_hi,
                                                Level level, const Caps& caps) {
  caps.validate();
  if (n_lo == 0 || n_lo > n_hi) {
    throw Error(ErrorKind::InvalidArgument, "n range must satisfy 1 <= lo <= hi", {{"lo", n_lo}, {"hi", n_hi}});
  }
  if (!a.exhaustive() && !b.exhaustive()) {
    throw Error(ErrorKind::NotExhaustible, "neither side can be enumerated exhaustively",
                {{"A", a.family()}, {"B", b.family()}});
  }
  for (const Side* s : {&a, &b}) {
    if (const auto* d = std::get_if<IntervalDomain>(&s->value); d && d->kind == DomainKind::Circle) {
      throw Error(ErrorKind::InvalidArgument, "a circle side needs an explicit arc cover");
    }
  }

  const auto wa = witness_of(a, caps);
  const auto wb = witness_of(b, caps);
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const auto fa = fingerprints_at(a, wa, n, level, caps);
    if (!fa) continue;
    const auto fb = fingerprints_at(b, wb, n, level, caps);
    if (!fb) continue;

    // side 0: witness on A, B exhaustive; side 1: the mirror image.
    for (int side = 0; side < 2; ++side) {
      const Side& other = side == 0 ? b : a;
      const FingerprintSet& mine = side == 0 ? *fa : *fb;
      const FingerprintSet& theirs = side == 0 ? *fb : *fa;
      if (!other.exhaustive()) continue;
      auto it = std::find_if(mine.elements.begin(), mine.elements.end(),
                             [&](const auto& e) { return !theirs.contains(e.first); });
      if (it == mine.elements.end()) continue;

      Certificate c;
      c.level = level;
      c.n = n;
      c.witness_side = side;
      c.witness = it->second;
      c.exhaustive_family = other.family();
      c.keys_a = keys_of(*fa);
      c.keys_b = keys_of(*fb);
      c.caps = caps;
      c.spec_a = to_json(a);
      c.spec_b = to_json(b);
      return c;
    }
  }
  return std::nullopt;
}

json to_json(const Certificate& c) {
  const bool interval_scoped = c.exhaustive_family.rfind("interval-types:", 0) == 0;
  json j;
  j["verdict"] = "not-homeomorphic";
  j["tool"] = {{"name", "coverinv"}, {"version", COVERINV_VERSION}};
  j["level"] = to_string(c.level);
  j["n"] = c.n;
  j["witness"] = {{"side", side_name(c.witness_side)},
                  {"cover", c.witness.source},
                  {"key", level_key(c.witness, c.level)},
                  {"fingerprint", to_json(c.witness)}};
  j["exhaustive"] = {{"side", side_name(1 - c.witness_side)},
                     {"family", c.exhaustive_family},
                     {"count", c.witness_side == 0 ? c.keys_b.size() : c.keys_a.size()},
                     {"scope", interval_scoped ? "covers by single intervals, endpoint ties included"
                                               : "all open covers"}};
  j["caps"] = {{"cover", c.caps.cover}, {"vertices", c.caps.vertices}, {"cover_candidates", c.caps.cover_candidates}};
  j["fingerprints"] = {{"A", c.keys_a}, {"B", c.keys_b}};
  j["inputs"] = {{"A", c.spec_a}, {"B", c.spec_b}};
  return j;
}

ReplayResult replay_certificate(const json& certificate) {
  try {
    Caps caps;
    const json& jc = certificate.at("caps");
    caps.cover = jc.at("cover").get<std::size_t>();
    caps.vertices = jc.at("vertices").get<std::size_t>();
    caps.cover_candidates = jc.at("cover_candidates").get<std::uint64_t>();
    const Level level = parse_level(certificate.at("level").get<std::string>());
    const auto n = certificate.at("n").get<std::size_t>();
    const Side a = side_from_json(certificate.at("inputs").at("A"));
    const Side b = side_from_json(certificate.at("inputs").at("B"));
    const auto again = nonhomeo_certificate(a, b, n, n, level, caps);
    if (!again) return {false, "no separating fingerprint at n=" + std::to_string(n)};
    const json rebuilt = to_json(*again);
    if (rebuilt != certificate) {
      for (const auto& [key, value] : rebuilt.items()) {
        if (!certificate.contains(key) || certificate.at(key) != value) return {false, "field '" + key + "' differs"};
      }
      return {false, "certificate carries extra fields"};
    }
    return {true, "reproduced"};
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace coverinv
