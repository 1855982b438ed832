#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "coverinv/arrangement.hpp"
#include "coverinv/fingerprint.hpp"
#include "coverinv/space.hpp"

namespace coverinv {

struct Caps {
  /// Largest n for interval cover-type enumeration (at most kIntervalHardCap).
  std::size_t cover = kDefaultIntervalCap;
  /// Largest Hasse digraph handed to canonicalisation.
  std::size_t vertices = kDefaultVertexCap;
  /// Candidate budget for finite-space cover enumeration.
  std::uint64_t cover_candidates = std::uint64_t{1} << 24;

  /// Throws InvalidArgument unless every cap is positive.
  void validate() const;
};

/// Fingerprints of all covers of `space` with exactly n members.
FingerprintSet pg_n(const FiniteSpace& space, std::size_t n, Level level, const Caps& caps = {});
/// Fingerprints of all n-member covers of `domain` by single intervals, one per combinatorial type.
FingerprintSet pg_n(const IntervalDomain& domain, std::size_t n, Level level, const Caps& caps = {});
/// Union over every cover size of a finite space.
FingerprintSet pg_all(const FiniteSpace& space, Level level, const Caps& caps = {});
/// The empty space has the single cover {∅}; by convention it gives the
/// one-vertex fingerprint (the algebra C), in the "n=1" scope.
FingerprintSet pg_empty(Level level);

/// Mutual containment of the two sets. Throws LevelMismatch when the levels
/// or the scopes differ.
bool wl_compare(const FingerprintSet& x, const FingerprintSet& y);

enum class StrKind { CStar, K };

/// Multiset over all covers of `space` of the block decomposition (CStar) or
/// the K-pair (K), as text key -> multiplicity.
std::map<std::string, std::size_t> str_invariants(const FiniteSpace& space, StrKind kind, const Caps& caps = {});

/// One side of a non-homeomorphism search. A finite space and an interval
/// domain (segment or line) are enumerated exhaustively; a single interval or
/// plane cover only ever serves as a witness.
struct Side {
  std::variant<FiniteSpace, IntervalDomain, IntervalSpec, AxisAlignedSpec> value;

  bool exhaustive() const;
  /// "finite-space", "interval-types:segment", "interval-cover:circle", "axis-cover"
  std::string family() const;
};

struct Certificate {
  Level level = Level::Graph;
  std::size_t n = 0;
  /// 0 when the witness lives on side A, 1 for side B.
  int witness_side = 0;
  Fingerprint witness;
  std::string exhaustive_family;
  std::vector<std::string> keys_a;
  std::vector<std::string> keys_b;
  Caps caps;
  nlohmann::json spec_a;
  nlohmann::json spec_b;
};

/// Looks for the smallest n in [n_lo, n_hi] with a fingerprint that arises on
/// one side and is absent from the other, exhaustively enumerated, side.
/// Returns nullopt when nothing separates them in the range. Throws
/// NotExhaustible when neither side can be enumerated exhaustively.
std::optional<Certificate> nonhomeo_certificate(const Side& a, const Side& b, std::size_t n_lo, std::size_t n_hi,
                                                Level level, const Caps& caps = {});

nlohmann::json to_json(const Certificate& c);

struct ReplayResult {
  bool ok = false;
  std::string reason;
};

/// Rebuilds both sides from the embedded specs, reruns the search at the
/// recorded n, level and caps, and compares the result with `certificate`.
ReplayResult replay_certificate(const nlohmann::json& certificate);

}  // namespace coverinv
