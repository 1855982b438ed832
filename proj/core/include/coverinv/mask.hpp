#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace coverinv {

/// Subset of a small ground set (points of a space, or member indices of a
/// cover), bit i set iff element i is present. Ground sets are capped at 64.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaskBits = 64;

constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }
constexpr Mask low_bits(std::size_t n) noexcept { return n >= kMaskBits ? ~Mask{0} : bit(n) - 1; }
constexpr bool contains(Mask set, std::size_t i) noexcept { return (set >> i) & 1U; }
constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }
constexpr bool is_proper_subset(Mask a, Mask b) noexcept { return a != b && is_subset(a, b); }
constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

inline std::vector<std::size_t> indices_of(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

/// Orders masks by size, then lexicographically on their sorted element
/// lists. Used wherever a canonical listing of subsets is emitted.
struct SizeLexLess {
  bool operator()(Mask a, Mask b) const noexcept {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // Same size: the lowest differing element decides; whoever owns it is smaller.
    const Mask diff = a ^ b;
    if (diff == 0) return false;
    return (a & diff & (~diff + 1)) != 0;
  }
};

}  // namespace coverinv
