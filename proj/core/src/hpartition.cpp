#include "coverinv/hpartition.hpp"

#include <algorithm>
#include <numeric>

#include "coverinv/error.hpp"
#include "coverinv/space.hpp"

namespace coverinv {

HPartition make_hpartition(std::size_t member_count, std::vector<Mask> classes, std::string source) {
  if (member_count > kMaskBits) throw_cap_exceeded("cover member count", member_count, kMaskBits);
  const Mask all = low_bits(member_count);
  for (Mask c : classes) {
    if (c == 0) throw Error(ErrorKind::InvalidArgument, "h-class must be nonempty");
    if (!is_subset(c, all)) throw Error(ErrorKind::InvalidArgument, "h-class mentions a member index out of range");
  }
  std::sort(classes.begin(), classes.end(), SizeLexLess{});
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return HPartition{member_count, std::move(classes), std::move(source)};
}

HPartition hpartition_of_cover(const FiniteSpace& space, const Cover& cover) {
  const auto& members = cover.members;
  std::vector<Mask> values;
  values.reserve(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    Mask h = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (contains(members[i], x)) h |= bit(i);
    }
    values.push_back(h);
  }
  std::string source = "cover{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) source += ",";
    source += "{";
    const auto names = space.names_of(members[i]);
    for (std::size_t j = 0; j < names.size(); ++j) source += (j ? "," : "") + names[j];
    source += "}";
  }
  source += "}";
  return make_hpartition(members.size(), std::move(values), std::move(source));
}

HPartition relabel_members(const HPartition& p, const std::vector<std::size_t>& perm) {
  std::vector<Mask> classes;
  classes.reserve(p.classes.size());
  for (Mask c : p.classes) {
    Mask out = 0;
    for (auto i : indices_of(c)) out |= bit(perm.at(i));
    classes.push_back(out);
  }
  return make_hpartition(p.member_count, std::move(classes), p.source);
}

std::vector<Mask> canonical_partition_key(const HPartition& p) {
  constexpr std::size_t kMaxMembers = 8;
  if (p.member_count > kMaxMembers) throw_cap_exceeded("member count for partition canonicalisation", p.member_count, kMaxMembers);
  std::vector<std::size_t> perm(p.member_count);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  std::vector<Mask> scratch(p.classes.size());
  do {
    for (std::size_t k = 0; k < p.classes.size(); ++k) {
      Mask out = 0;
      for (auto i : indices_of(p.classes[k])) out |= bit(perm[i]);
      scratch[k] = out;
    }
    std::sort(scratch.begin(), scratch.end(), SizeLexLess{});
    if (best.empty() || std::lexicographical_compare(scratch.begin(), scratch.end(), best.begin(), best.end())) {
      best = scratch;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace coverinv
