#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coverinv/mask.hpp"

namespace coverinv {

class FiniteSpace;
struct Cover;

/// The distinct values of the h-map of a cover: each class is the set of cover
/// member indices containing some point. Classes are distinct, nonempty and
/// listed in SizeLexLess order; the quotient poset is inclusion of classes.
struct HPartition {
  std::size_t member_count = 0;
  std::vector<Mask> classes;
  std::string source;

  std::size_t size() const noexcept { return classes.size(); }
  friend bool operator==(const HPartition& a, const HPartition& b) {
    return a.member_count == b.member_count && a.classes == b.classes;
  }
};

/// Sorts, deduplicates and checks the classes (nonempty, within member_count).
HPartition make_hpartition(std::size_t member_count, std::vector<Mask> classes, std::string source = {});

/// h(x) = {i : x in member i} for every point; one class per distinct value.
HPartition hpartition_of_cover(const FiniteSpace& space, const Cover& cover);

/// Renames member indices by `perm` (old index i becomes perm[i]).
HPartition relabel_members(const HPartition& p, const std::vector<std::size_t>& perm);

/// Minimal class listing over all renamings of the member indices: two
/// partitions are isomorphic (same family up to renaming members) iff their
/// keys are equal. Member count is capped at 8.
std::vector<Mask> canonical_partition_key(const HPartition& p);

}  // namespace coverinv
