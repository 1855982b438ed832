#include "coverinv/invariants.hpp"

#include <algorithm>

#include "coverinv/error.hpp"

namespace coverinv {
namespace {

CoverEnumerationLimits limits_of(const Caps& caps) {
  CoverEnumerationLimits l;
  l.max_candidates = caps.cover_candidates;
  return l;
}

}  // namespace

void Caps::validate() const {
  if (cover == 0 || vertices == 0 || cover_candidates == 0) {
    throw Error(ErrorKind::InvalidArgument, "caps must be positive",
                {{"cover", cover}, {"vertices", vertices}, {"cover_candidates", cover_candidates}});
  }
}

FingerprintSet pg_n(const FiniteSpace& space, std::size_t n, Level level, const Caps& caps) {
  caps.validate();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cover size must be positive");
  FingerprintSet out{level, "n=" + std::to_string(n), {}};
  for_each_cover(
      space, n,
      [&](const Cover& c) {
        out.insert(fingerprint_of_cover(space, c, caps.vertices));
        return true;
      },
      limits_of(caps));
  return out;
}

FingerprintSet pg_n(const IntervalDomain& domain, std::size_t n, Level level, const Caps& caps) {
  caps.validate();
  FingerprintSet out{level, "n=" + std::to_string(n), {}};
  for (const auto& p : enumerate_interval_cover_types(domain, n, caps.cover)) {
    out.insert(fingerprint_of_partition(p, caps.vertices));
  }
  return out;
}

FingerprintSet pg_all(const FiniteSpace& space, Level level, const Caps& caps) {
  caps.validate();
  FingerprintSet out{level, "all", {}};
  for_each_cover(
      space, std::nullopt,
      [&](const Cover& c) {
        out.insert(fingerprint_of_cover(space, c, caps.vertices));
        return true;
      },
      limits_of(caps));
  return out;
}

FingerprintSet pg_empty(Level level) {
  // The cover {∅} has one member, so this sits in the n=1 scope.
  FingerprintSet out{level, "n=1", {}};
  Fingerprint f = fingerprint_of_graph(DiGraph(1));
  f.source = "{∅}";
  out.insert(f);
  return out;
}

bool wl_compare(const FingerprintSet& x, const FingerprintSet& y) {
  if (x.level != y.level || x.scope != y.scope) {
    throw Error(ErrorKind::LevelMismatch, "fingerprint sets are not comparable",
                {{"left", {{"level", to_string(x.level)}, {"scope", x.scope}}},
                 {"right", {{"level", to_string(y.level)}, {"scope", y.scope}}}});
  }
  auto within = [](const FingerprintSet& a, const FingerprintSet& b) {
    return std::all_of(a.elements.begin(), a.elements.end(), [&](const auto& e) { return b.contains(e.first); });
  };
  return within(x, y) && within(y, x);
}

std::map<std::string, std::size_t> str_invariants(const FiniteSpace& space, StrKind kind, const Caps& caps) {
  caps.validate();
  std::map<std::string, std::size_t> out;
  for_each_cover(
      space, std::nullopt,
      [&](const Cover& c) {
        const Fingerprint f = fingerprint_of_cover(space, c, caps.vertices);
        ++out[kind == StrKind::CStar ? "{" + f.blocks.to_string() + "}" : f.kpair.to_string()];
        return true;
      },
      limits_of(caps));
  return out;
}

bool Side::exhaustive() const {
  if (std::holds_alternative<FiniteSpace>(value)) return true;
  if (const auto* d = std::get_if<IntervalDomain>(&value)) return d->kind != DomainKind::Circle;
  return false;
}

std::string Side::family() const {
  if (std::holds_alternative<FiniteSpace>(value)) return "finite-space";
  if (const auto* d = std::get_if<IntervalDomain>(&value)) return "interval-types:" + to_string(d->kind);
  if (const auto* s = std::get_if<IntervalSpec>(&value)) return "interval-cover:" + to_string(s->domain.kind);
  return "axis-cover";
}

}  // namespace coverinv
