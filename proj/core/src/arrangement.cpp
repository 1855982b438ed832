#include "coverinv/arrangement.hpp"

#include <algorithm>
#include <optional>

#include "coverinv/error.hpp"

namespace coverinv {
namespace {

using nlohmann::json;

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Rational mod(const Rational& r, const Rational& m) {
  const Rational ratio = r / m;
  const BigInt k = floor_div(boost::multiprecision::numerator(ratio), boost::multiprecision::denominator(ratio));
  return r - m * Rational(k);
}

/// A cell of a one-dimensional walk: an endpoint, or the open gap (a, b).
struct Cell {
  bool point = false;
  ExtRational a;
  ExtRational b;

  std::string describe() const {
    if (point) return "point " + to_string(a);
    return "open (" + to_string(a) + ", " + to_string(b) + ")";
  }
};

std::vector<ExtRational> sorted_unique(std::vector<ExtRational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Cells of the line cut at `cuts` (finite, sorted, unique).
std::vector<Cell> line_cells(const std::vector<ExtRational>& cuts) {
  std::vector<Cell> cells;
  ExtRational left = ExtRational::neg_inf();
  for (const auto& c : cuts) {
    cells.push_back({false, left, c});
    cells.push_back({true, c, c});
    left = c;
  }
  cells.push_back({false, left, ExtRational::pos_inf()});
  return cells;
}

[[noreturn]] void not_a_cover(const std::string& where) {
  throw Error(ErrorKind::NotACover, "members leave a cell uncovered: " + where, {{"uncovered_cell", where}});
}

HPartition finish(std::size_t members, std::vector<Mask> classes, std::string source) {
  return make_hpartition(members, std::move(classes), std::move(source));
}

std::string member_text(const IntervalDomain& d, const Interval& m) {
  if (d.kind == DomainKind::Circle) return "arc(" + to_string(m.lo) + "," + to_string(m.hi) + ")";
  return std::string(m.closed_lo ? "[" : "(") + to_string(m.lo) + "," + to_string(m.hi) + ")";
}

std::string spec_text(const IntervalSpec& spec) {
  std::string s = to_string(spec.domain.kind) + "{";
  for (std::size_t i = 0; i < spec.members.size(); ++i) s += (i ? " " : "") + member_text(spec.domain, spec.members[i]);
  return s + "}";
}

}  // namespace

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::Segment: return "segment";
    case DomainKind::Line: return "line";
    case DomainKind::Circle: return "circle";
  }
  return "unknown";
}

IntervalDomain IntervalDomain::segment(Rational lo, Rational hi) {
  IntervalDomain d;
  d.kind = DomainKind::Segment;
  d.lo = std::move(lo);
  d.hi = std::move(hi);
  return d;
}

IntervalDomain IntervalDomain::line() {
  IntervalDomain d;
  d.kind = DomainKind::Line;
  return d;
}

IntervalDomain IntervalDomain::circle(Rational circumference) {
  IntervalDomain d;
  d.kind = DomainKind::Circle;
  d.circumference = std::move(circumference);
  return d;
}

void validate_interval_spec(const IntervalSpec& spec) {
  const auto& d = spec.domain;
  if (spec.members.empty()) throw Error(ErrorKind::InvalidSpec, "a cover needs at least one member");
  if (spec.members.size() > kMaskBits) throw_cap_exceeded("cover member count", spec.members.size(), kMaskBits);
  if (d.kind == DomainKind::Segment && !(d.lo < d.hi)) throw Error(ErrorKind::InvalidSpec, "segment needs lo < hi");
  if (d.kind == DomainKind::Circle && !(d.circumference > 0)) {
    throw Error(ErrorKind::InvalidSpec, "circle needs a positive circumference");
  }
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    const auto& m = spec.members[i];
    const json where = {{"index", i}};
    if (d.kind != DomainKind::Line && (!m.lo.finite() || !m.hi.finite())) {
      throw Error(ErrorKind::InvalidSpec, "infinite endpoints are only allowed on the line", where);
    }
    if (!(m.lo < m.hi)) throw Error(ErrorKind::EmptyMember, "member " + std::to_string(i) + " is empty", where);
    switch (d.kind) {
      case DomainKind::Segment:
        if (m.lo.value() < d.lo || d.hi < m.hi.value()) {
          throw Error(ErrorKind::InvalidSpec, "member leaves the segment", where);
        }
        if (m.closed_lo && m.lo.value() != d.lo) {
          throw Error(ErrorKind::InvalidSpec, "a closed left end is only open at the segment's left boundary", where);
        }
        break;
      case DomainKind::Line:
        if (m.closed_lo) throw Error(ErrorKind::InvalidSpec, "members of the line are open intervals", where);
        if (m.lo == ExtRational::pos_inf() || m.hi == ExtRational::neg_inf()) {
          throw Error(ErrorKind::EmptyMember, "member " + std::to_string(i) + " is empty", where);
        }
        break;
      case DomainKind::Circle:
        if (m.closed_lo) throw Error(ErrorKind::InvalidSpec, "members of the circle are open arcs", where);
        break;
    }
  }
}

HPartition hclasses_of_intervals(const IntervalSpec& spec) {
  validate_interval_spec(spec);
  const auto& d = spec.domain;
  const auto& members = spec.members;
  std::vector<Mask> classes;

  if (d.kind == DomainKind::Circle) {
    const Rational& C = d.circumference;
    struct Arc {
      Rational start;
      Rational length;
    };
    std::vector<Arc> arcs;
    std::vector<ExtRational> cuts;
    for (const auto& m : members) {
      Arc a{mod(m.lo.value(), C), m.hi.value() - m.lo.value()};
      cuts.emplace_back(a.start);
      cuts.emplace_back(mod(a.start + a.length, C));
      arcs.push_back(std::move(a));
    }
    cuts = sorted_unique(std::move(cuts));
    // Cells: each cut point, then the open arc to the next cut (wrapping).
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      const Rational p = cuts[i].value();
      const Rational next = i + 1 < cuts.size() ? cuts[i + 1].value() : cuts[0].value() + C;
      Mask at_point = 0;
      Mask on_gap = 0;
      for (std::size_t j = 0; j < arcs.size(); ++j) {
        const auto& a = arcs[j];
        const bool whole = a.length > C;
        const Rational offset = mod(p - a.start, C);
        if (whole || (offset > 0 && offset < a.length)) at_point |= bit(j);
        if (whole || offset + (next - p) <= a.length) on_gap |= bit(j);
      }
      if (at_point == 0) not_a_cover("point " + to_string(p));
      if (on_gap == 0) not_a_cover("open arc (" + to_string(p) + ", " + to_string(mod(next, C)) + ")");
      classes.push_back(at_point);
      classes.push_back(on_gap);
    }
    return finish(members.size(), std::move(classes), spec_text(spec));
  }

  std::vector<ExtRational> cuts;
  for (const auto& m : members) {
    for (const auto* e : {&m.lo, &m.hi}) {
      if (e->finite()) cuts.push_back(*e);
    }
  }
  std::vector<Cell> cells;
  if (d.kind == DomainKind::Line) {
    cells = line_cells(sorted_unique(std::move(cuts)));
  } else {
    cuts.emplace_back(d.lo);
    cuts = sorted_unique(std::move(cuts));
    // Keep [lo, hi): the right end of the segment is not a point of the domain.
    cuts.erase(std::remove_if(cuts.begin(), cuts.end(), [&](const ExtRational& c) { return c.value() >= d.hi; }),
               cuts.end());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      cells.push_back({true, cuts[i], cuts[i]});
      cells.push_back({false, cuts[i], i + 1 < cuts.size() ? cuts[i + 1] : ExtRational(d.hi)});
    }
  }
  for (const auto& cell : cells) {
    Mask h = 0;
    for (std::size_t j = 0; j < members.size(); ++j) {
      const auto& m = members[j];
      const bool in = cell.point ? ((m.lo < cell.a || (m.closed_lo && m.lo == cell.a)) && cell.a < m.hi)
                                 : (m.lo <= cell.a && cell.b <= m.hi);
      if (in) h |= bit(j);
    }
    if (h == 0) not_a_cover(cell.describe());
    classes.push_back(h);
  }
  return finish(members.size(), std::move(classes), spec_text(spec));
}

HPartition hclasses_axis2d(const AxisAlignedSpec& spec) {
  using Axis = AxisConstraint::Axis;
  using Op = AxisConstraint::Op;
  if (spec.members.empty()) throw Error(ErrorKind::InvalidSpec, "a cover needs at least one member");
  if (spec.members.size() > kMaskBits) throw_cap_exceeded("cover member count", spec.members.size(), kMaskBits);

  std::vector<ExtRational> xs;
  std::vector<ExtRational> ys;
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    std::optional<Rational> lower[2];
    std::optional<Rational> upper[2];
    for (const auto& c : spec.members[i]) {
      const int a = c.axis == Axis::X ? 0 : 1;
      (a == 0 ? xs : ys).emplace_back(c.bound);
      if (c.op == Op::Greater) {
        if (!lower[a] || *lower[a] < c.bound) lower[a] = c.bound;
      } else {
        if (!upper[a] || c.bound < *upper[a]) upper[a] = c.bound;
      }
    }
    for (int a = 0; a < 2; ++a) {
      if (lower[a] && upper[a] && !(*lower[a] < *upper[a])) {
        throw Error(ErrorKind::EmptyMember, "region " + std::to_string(i) + " is empty", {{"index", i}});
      }
    }
  }
  const auto xcells = line_cells(sorted_unique(std::move(xs)));
  const auto ycells = line_cells(sorted_unique(std::move(ys)));

  auto satisfies = [](const AxisConstraint& c, const Cell& cell) {
    if (c.op == Op::Less) return cell.point ? cell.a < ExtRational(c.bound) : cell.b <= ExtRational(c.bound);
    return cell.point ? ExtRational(c.bound) < cell.a : ExtRational(c.bound) <= cell.a;
  };

  std::vector<Mask> classes;
  for (const auto& xc : xcells) {
    for (const auto& yc : ycells) {
      Mask h = 0;
      for (std::size_t i = 0; i < spec.members.size(); ++i) {
        bool in = true;
        for (const auto& c : spec.members[i]) {
          if (!satisfies(c, c.axis == Axis::X ? xc : yc)) {
            in = false;
            break;
          }
        }
        if (in) h |= bit(i);
      }
      if (h == 0) not_a_cover("x " + xc.describe() + ", y " + yc.describe());
      classes.push_back(h);
    }
  }
  return finish(spec.members.size(), std::move(classes), "plane{" + std::to_string(spec.members.size()) + " regions}");
}

}  // namespace coverinv
