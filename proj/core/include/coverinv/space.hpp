#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coverinv/mask.hpp"

namespace coverinv {

/// A finite topological space: ordered point identifiers plus the family of
/// open sets as point masks. Instances only come out of validate_topology /
/// generate_topology, so the topology axioms always hold.
class FiniteSpace {
 public:
  const std::vector<std::string>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  Mask whole() const noexcept { return low_bits(points_.size()); }

  /// All opens, ∅ first and the whole space last (SizeLexLess order).
  const std::vector<Mask>& opens() const noexcept { return opens_; }
  /// Opens other than ∅, in the same order. These are the cover candidates.
  std::span<const Mask> nonempty_opens() const noexcept;
  bool is_open(Mask m) const;

  std::size_t index_of(std::string_view point) const;
  Mask mask_of(std::span<const std::string> names) const;
  std::vector<std::string> names_of(Mask m) const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  friend FiniteSpace validate_topology(std::vector<std::string>, std::vector<Mask>);
  friend FiniteSpace generate_topology(std::vector<std::string>, std::span<const Mask>);

  std::vector<std::string> points_;
  std::vector<Mask> opens_;
};

/// Checks the topology axioms exhaustively. Throws Error with kind
/// DuplicatePoint, MissingEmpty, MissingWhole, NotClosedUnderUnion or
/// NotClosedUnderIntersection (the latter two carry the witness pair).
FiniteSpace validate_topology(std::vector<std::string> points, std::vector<Mask> opens);
FiniteSpace validate_topology(std::vector<std::string> points,
                              const std::vector<std::vector<std::string>>& opens);

/// Smallest topology containing the subbasis.
FiniteSpace generate_topology(std::vector<std::string> points, std::span<const Mask> subbasis);
FiniteSpace generate_topology(std::vector<std::string> points,
                              const std::vector<std::vector<std::string>>& subbasis);

/// An open cover: pairwise distinct nonempty opens whose union is the space.
/// Members are kept sorted, so equal covers compare equal.
struct Cover {
  std::vector<Mask> members;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// Validates and normalises a member list into a Cover of `space`.
/// Throws NotACover / EmptyMember / InvalidArgument.
Cover make_cover(const FiniteSpace& space, std::vector<Mask> members);

/// The one-member cover {X}.
Cover trivial_cover(const FiniteSpace& space);

struct CoverEnumerationLimits {
  /// Upper bound on the number of candidate member subsets examined.
  std::uint64_t max_candidates = std::uint64_t{1} << 24;
};

/// Visits every cover of `space` (every cover with exactly `n` members when
/// given) exactly once, in lexicographic order of the member lists (members
/// compared by SizeLexLess).
/// Return false from the visitor to stop early.
void for_each_cover(const FiniteSpace& space, std::optional<std::size_t> n,
                    const std::function<bool(const Cover&)>& visit,
                    CoverEnumerationLimits limits = {});

std::vector<Cover> enumerate_covers(const FiniteSpace& space, std::optional<std::size_t> n = std::nullopt,
                                    CoverEnumerationLimits limits = {});

/// Image of `cover` under the point bijection `source point i -> target point
/// map[i]`, after checking the map is a homeomorphism source -> target.
Cover push_forward_cover(const FiniteSpace& source, const Cover& cover, const FiniteSpace& target,
                         std::span<const std::size_t> map);

/// Throws NotAHomeomorphism unless `map` is a bijection carrying opens onto opens
/// in both directions.
void check_homeomorphism(const FiniteSpace& source, const FiniteSpace& target, std::span<const std::size_t> map);

Mask image_of(Mask m, std::span<const std::size_t> map);

}  // namespace coverinv
