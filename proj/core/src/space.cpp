#include "coverinv/space.hpp"

#include <algorithm>
#include <unordered_set>

#include "coverinv/error.hpp"

namespace coverinv {
namespace {

using nlohmann::json;

void check_points(const std::vector<std::string>& points) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "a space needs at least one point");
  if (points.size() > kMaskBits) throw_cap_exceeded("point count", points.size(), kMaskBits);
  std::unordered_set<std::string_view> seen;
  for (const auto& p : points) {
    if (!seen.insert(p).second) {
      throw Error(ErrorKind::DuplicatePoint, "duplicate point identifier '" + p + "'", {{"point", p}});
    }
  }
}

json names_json(const std::vector<std::string>& points, Mask m) {
  json out = json::array();
  for (auto i : indices_of(m)) out.push_back(points[i]);
  return out;
}

void sort_unique(std::vector<Mask>& masks) {
  std::sort(masks.begin(), masks.end(), SizeLexLess{});
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
}

Mask mask_from_names(const std::vector<std::string>& points, const std::vector<std::string>& names) {
  Mask m = 0;
  for (const auto& n : names) {
    auto it = std::find(points.begin(), points.end(), n);
    if (it == points.end()) {
      throw Error(ErrorKind::InvalidArgument, "unknown point '" + n + "'", {{"point", n}});
    }
    m |= bit(static_cast<std::size_t>(it - points.begin()));
  }
  return m;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k, std::uint64_t ceiling) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > ceiling) return ceiling + 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::span<const Mask> FiniteSpace::nonempty_opens() const noexcept {
  return std::span<const Mask>(opens_).subspan(1);
}

bool FiniteSpace::is_open(Mask m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m, SizeLexLess{});
}

std::size_t FiniteSpace::index_of(std::string_view point) const {
  auto it = std::find(points_.begin(), points_.end(), point);
  if (it == points_.end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown point '" + std::string(point) + "'",
                {{"point", std::string(point)}});
  }
  return static_cast<std::size_t>(it - points_.begin());
}

Mask FiniteSpace::mask_of(std::span<const std::string> names) const {
  return mask_from_names(points_, std::vector<std::string>(names.begin(), names.end()));
}

std::vector<std::string> FiniteSpace::names_of(Mask m) const {
  std::vector<std::string> out;
  for (auto i : indices_of(m)) out.push_back(points_.at(i));
  return out;
}

FiniteSpace validate_topology(std::vector<std::string> points, std::vector<Mask> opens) {
  check_points(points);
  const Mask whole = low_bits(points.size());
  for (Mask m : opens) {
    if (!is_subset(m, whole)) throw Error(ErrorKind::InvalidArgument, "open set mentions points outside the space");
  }
  sort_unique(opens);
  if (opens.empty() || opens.front() != 0) throw Error(ErrorKind::MissingEmpty, "the empty set is not open");
  if (opens.back() != whole) throw Error(ErrorKind::MissingWhole, "the whole space is not open");

  std::unordered_set<Mask> lookup(opens.begin(), opens.end());
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const Mask a = opens[i];
      const Mask b = opens[j];
      if (!lookup.contains(a | b)) {
        throw Error(ErrorKind::NotClosedUnderUnion, "union of two opens is not open",
                    {{"witness", {names_json(points, a), names_json(points, b)}}});
      }
      if (!lookup.contains(a & b)) {
        throw Error(ErrorKind::NotClosedUnderIntersection, "intersection of two opens is not open",
                    {{"witness", {names_json(points, a), names_json(points, b)}}});
      }
    }
  }
  FiniteSpace s;
  s.points_ = std::move(points);
  s.opens_ = std::move(opens);
  return s;
}

FiniteSpace validate_topology(std::vector<std::string> points, const std::vector<std::vector<std::string>>& opens) {
  check_points(points);
  std::vector<Mask> masks;
  masks.reserve(opens.size());
  for (const auto& o : opens) masks.push_back(mask_from_names(points, o));
  return validate_topology(std::move(points), std::move(masks));
}

FiniteSpace generate_topology(std::vector<std::string> points, std::span<const Mask> subbasis) {
  check_points(points);
  const Mask whole = low_bits(points.size());
  constexpr std::size_t kMaxOpens = std::size_t{1} << 20;

  // Finite intersections (the empty intersection is X) give a basis...
  std::unordered_set<Mask> basis{whole};
  for (Mask m : subbasis) {
    if (!is_subset(m, whole)) throw Error(ErrorKind::InvalidArgument, "subbasis set mentions points outside the space");
    basis.insert(m);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> snapshot(basis.begin(), basis.end());
    for (Mask a : snapshot)
      for (Mask b : snapshot)
        if (basis.insert(a & b).second) grew = true;
  }
  // ...and unions of basis sets give the topology.
  std::unordered_set<Mask> opens{0};
  for (Mask b : basis) {
    std::vector<Mask> snapshot(opens.begin(), opens.end());
    for (Mask o : snapshot) opens.insert(o | b);
    if (opens.size() > kMaxOpens) throw_cap_exceeded("generated open count", opens.size(), kMaxOpens);
  }
  std::vector<Mask> sorted(opens.begin(), opens.end());
  sort_unique(sorted);
  FiniteSpace s;
  s.points_ = std::move(points);
  s.opens_ = std::move(sorted);
  return s;
}

FiniteSpace generate_topology(std::vector<std::string> points, const std::vector<std::vector<std::string>>& subbasis) {
  check_points(points);
  std::vector<Mask> masks;
  for (const auto& s : subbasis) masks.push_back(mask_from_names(points, s));
  return generate_topology(std::move(points), std::span<const Mask>(masks));
}

Cover make_cover(const FiniteSpace& space, std::vector<Mask> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == 0) throw Error(ErrorKind::EmptyMember, "cover member is empty", {{"index", i}});
    if (!space.is_open(members[i])) {
      throw Error(ErrorKind::InvalidArgument, "cover member is not open",
                  {{"index", i}, {"member", space.names_of(members[i])}});
    }
  }
  std::sort(members.begin(), members.end(), SizeLexLess{});
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw Error(ErrorKind::InvalidArgument, "cover members must be pairwise distinct");
  }
  Mask covered = 0;
  for (Mask m : members) covered |= m;
  if (covered != space.whole()) {
    throw Error(ErrorKind::NotACover, "members do not cover the space",
                {{"uncovered", space.names_of(space.whole() & ~covered)}});
  }
  return Cover{std::move(members)};
}

Cover trivial_cover(const FiniteSpace& space) { return Cover{{space.whole()}}; }

void for_each_cover(const FiniteSpace& space, std::optional<std::size_t> n,
                    const std::function<bool(const Cover&)>& visit, CoverEnumerationLimits limits) {
  const auto candidates = space.nonempty_opens();
  const std::size_t k = candidates.size();
  if (n && (*n == 0 || *n > k)) return;

  std::uint64_t work = 0;
  if (n) {
    work = binomial_saturating(k, *n, limits.max_candidates);
  } else {
    work = k >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  }
  if (work > limits.max_candidates) throw_cap_exceeded("candidate cover count", work, limits.max_candidates);

  // suffix_union[i] = union of candidates[i..], for pruning branches that can no longer cover X.
  std::vector<Mask> suffix_union(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) suffix_union[i] = suffix_union[i + 1] | candidates[i];

  const Mask whole = space.whole();
  Cover current;
  bool stop = false;
  std::function<void(std::size_t, Mask)> dfs = [&](std::size_t start, Mask covered) {
    for (std::size_t i = start; i < k && !stop; ++i) {
      if (n && current.members.size() + (k - i) < *n) return;
      if ((covered | suffix_union[i]) != whole) return;
      current.members.push_back(candidates[i]);
      const Mask now = covered | candidates[i];
      const bool full = n ? current.members.size() == *n : true;
      if (full && now == whole) {
        if (!visit(current)) stop = true;
      }
      if (!stop && (!n || current.members.size() < *n)) dfs(i + 1, now);
      current.members.pop_back();
    }
  };
  dfs(0, 0);
}

std::vector<Cover> enumerate_covers(const FiniteSpace& space, std::optional<std::size_t> n,
                                    CoverEnumerationLimits limits) {
  std::vector<Cover> out;
  for_each_cover(space, n, [&](const Cover& c) {
    out.push_back(c);
    return true;
  }, limits);
  return out;
}

Mask image_of(Mask m, std::span<const std::size_t> map) {
  Mask out = 0;
  for (auto i : indices_of(m)) out |= bit(map[i]);
  return out;
}

void check_homeomorphism(const FiniteSpace& source, const FiniteSpace& target, std::span<const std::size_t> map) {
  if (map.size() != source.size() || source.size() != target.size()) {
    throw Error(ErrorKind::NotAHomeomorphism, "map is not a bijection between the point sets",
                {{"source_points", source.size()}, {"target_points", target.size()}, {"map_size", map.size()}});
  }
  std::vector<std::size_t> inverse(map.size(), map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= target.size() || inverse[map[i]] != map.size()) {
      throw Error(ErrorKind::NotAHomeomorphism, "map is not a bijection between the point sets",
                  {{"index", i}});
    }
    inverse[map[i]] = i;
  }
  for (Mask o : source.opens()) {
    if (!target.is_open(image_of(o, map))) {
      throw Error(ErrorKind::NotAHomeomorphism, "image of an open set is not open",
                  {{"open", source.names_of(o)}, {"image", target.names_of(image_of(o, map))}});
    }
  }
  for (Mask o : target.opens()) {
    if (!source.is_open(image_of(o, inverse))) {
      throw Error(ErrorKind::NotAHomeomorphism, "preimage of an open set is not open",
                  {{"open", target.names_of(o)}, {"preimage", source.names_of(image_of(o, inverse))}});
    }
  }
}

Cover push_forward_cover(const FiniteSpace& source, const Cover& cover, const FiniteSpace& target,
                         std::span<const std::size_t> map) {
  check_homeomorphism(source, target, map);
  std::vector<Mask> image;
  image.reserve(cover.members.size());
  for (Mask m : cover.members) image.push_back(image_of(m, map));
  return make_cover(target, std::move(image));
}

}  // namespace coverinv
