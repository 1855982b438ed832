// Enumeration of combinatorial types of covers of a segment or the line by
// n single intervals. Only the relative order of the 2n endpoints matters for
// the h-partition, so endpoints are placed on k distinct interior positions
// 1..k (ties allowed, every position used), with position 0 / k+1 standing
// for the domain ends.

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "coverinv/arrangement.hpp"
#include "coverinv/error.hpp"

namespace coverinv {
namespace {

struct MaskVectorHash {
  std::size_t operator()(const std::vector<Mask>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Mask m : v) h = (h ^ static_cast<std::size_t>(m)) * 0x100000001b3ULL;
    return h;
  }
};

/// One candidate member: its text, the walk cells it contains and the
/// interior positions it uses as endpoints.
struct IntervalType {
  std::string text;
  std::uint32_t cells = 0;
  std::uint32_t positions = 0;
};

std::string pos_name(std::size_t p, std::size_t k, DomainKind kind) {
  if (p == 0) return kind == DomainKind::Segment ? "0" : "-inf";
  if (p == k + 1) return kind == DomainKind::Segment ? "end" : "inf";
  return "p" + std::to_string(p);
}

// Walk cells, in order. Segment: point 0, (0,1), point 1, ..., point k, (k,k+1).
// Line: (0,1), point 1, ..., point k, (k,k+1).
std::vector<IntervalType> interval_types(DomainKind kind, std::size_t k) {
  const bool segment = kind == DomainKind::Segment;
  auto point_cell = [&](std::size_t p) { return segment ? 2 * p : 2 * p - 1; };
  auto gap_cell = [&](std::size_t p) { return segment ? 2 * p + 1 : 2 * p; };  // gap (p, p+1)

  std::vector<IntervalType> out;
  // Segment left-end codes: closed at 0, then open at 0, then interior positions.
  struct Lo {
    std::size_t pos;
    bool closed;
  };
  std::vector<Lo> los;
  if (segment) {
    los.push_back({0, true});
    los.push_back({0, false});
  } else {
    los.push_back({0, false});
  }
  for (std::size_t p = 1; p <= k; ++p) los.push_back({p, false});

  for (const auto& lo : los) {
    for (std::size_t hi = lo.pos + 1; hi <= k + 1; ++hi) {
      IntervalType t;
      t.text = std::string(lo.closed ? "[" : "(") + pos_name(lo.pos, k, kind) + "," + pos_name(hi, k, kind) + ")";
      if (segment && lo.closed) t.cells |= 1U << point_cell(0);
      for (std::size_t p = lo.pos + 1; p < hi; ++p) t.cells |= 1U << point_cell(p);
      for (std::size_t p = lo.pos; p < hi; ++p) t.cells |= 1U << gap_cell(p);
      if (lo.pos >= 1) t.positions |= 1U << (lo.pos - 1);
      if (hi <= k) t.positions |= 1U << (hi - 1);
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

std::vector<HPartition> enumerate_interval_cover_types(const IntervalDomain& domain, std::size_t n, std::size_t cap) {
  if (domain.kind == DomainKind::Circle) {
    throw Error(ErrorKind::InvalidArgument, "cover type enumeration supports the segment and the line only");
  }
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cover size must be positive");
  const std::size_t limit = std::min(cap, kIntervalHardCap);
  if (n > limit) throw_cap_exceeded("interval cover size", n, limit);

  const bool segment = domain.kind == DomainKind::Segment;
  std::unordered_set<std::vector<Mask>, MaskVectorHash> seen_raw;
  std::unordered_map<std::vector<Mask>, HPartition, MaskVectorHash> by_key;

  for (std::size_t k = 0; k <= 2 * n; ++k) {
    const auto types = interval_types(domain.kind, k);
    const std::size_t cell_count = segment ? 2 * k + 2 : 2 * k + 1;
    const std::uint32_t all_cells = cell_count >= 32 ? ~0U : (1U << cell_count) - 1;
    const std::uint32_t all_positions = k == 0 ? 0U : (1U << k) - 1;
    const std::size_t m = types.size();

    std::vector<std::uint32_t> suffix_cells(m + 1, 0);
    std::vector<std::uint32_t> suffix_positions(m + 1, 0);
    for (std::size_t i = m; i-- > 0;) {
      suffix_cells[i] = suffix_cells[i + 1] | types[i].cells;
      suffix_positions[i] = suffix_positions[i + 1] | types[i].positions;
    }

    std::vector<std::size_t> chosen;
    std::vector<Mask> per_cell(cell_count);
    auto emit = [&] {
      std::fill(per_cell.begin(), per_cell.end(), 0);
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        const std::uint32_t c = types[chosen[j]].cells;
        for (std::size_t cell = 0; cell < cell_count; ++cell)
          if ((c >> cell) & 1U) per_cell[cell] |= bit(j);
      }
      std::vector<Mask> raw = per_cell;
      std::sort(raw.begin(), raw.end(), SizeLexLess{});
      raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
      if (!seen_raw.insert(raw).second) return;
      std::string source = to_string(domain.kind) + "{";
      for (std::size_t j = 0; j < chosen.size(); ++j) source += (j ? " " : "") + types[chosen[j]].text;
      source += "}";
      HPartition p = make_hpartition(n, std::move(raw), std::move(source));
      by_key.try_emplace(canonical_partition_key(p), std::move(p));
    };

    auto dfs = [&](auto&& self, std::size_t start, std::uint32_t cells, std::uint32_t positions) -> void {
      if (chosen.size() == n) {
        if (cells == all_cells && positions == all_positions) emit();
        return;
      }
      for (std::size_t i = start; i + (n - chosen.size()) <= m; ++i) {
        if ((cells | suffix_cells[i]) != all_cells) return;
        if ((positions | suffix_positions[i]) != all_positions) return;
        chosen.push_back(i);
        self(self, i + 1, cells | types[i].cells, positions | types[i].positions);
        chosen.pop_back();
      }
    };
    dfs(dfs, 0, 0, 0);
  }

  std::vector<std::pair<std::vector<Mask>, HPartition>> sorted(by_key.begin(), by_key.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<HPartition> out;
  out.reserve(sorted.size());
  for (auto& [key, p] : sorted) out.push_back(std::move(p));
  return out;
}

}  // namespace coverinv
