#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coverinv/hpartition.hpp"
#include "coverinv/rational.hpp"

namespace coverinv {

enum class DomainKind { Segment, Line, Circle };

std::string to_string(DomainKind kind);

/// The space an interval cover lives on: the half-open segment [lo, hi), the
/// full line, or a circle of the given circumference (angles taken mod it).
struct IntervalDomain {
  DomainKind kind = DomainKind::Segment;
  Rational lo{0};
  Rational hi{1};
  Rational circumference{1};

  static IntervalDomain segment(Rational lo, Rational hi);
  static IntervalDomain line();
  static IntervalDomain circle(Rational circumference);
};

/// One cover member. On a segment, `closed_lo` is only legal at the left end
/// of the domain (the interval [lo, c) is open in the subspace topology). On
/// the line, endpoints may be infinite. On a circle the member is the open
/// arc running counter-clockwise from lo to hi; an arc longer than the
/// circumference is the whole circle.
struct Interval {
  ExtRational lo;
  ExtRational hi;
  bool closed_lo = false;
};

struct IntervalSpec {
  IntervalDomain domain;
  std::vector<Interval> members;
};

/// A strict coordinate constraint `x < c`, `x > c`, `y < c` or `y > c`.
struct AxisConstraint {
  enum class Axis { X, Y };
  enum class Op { Less, Greater };
  Axis axis = Axis::X;
  Op op = Op::Less;
  Rational bound{0};
};

/// A region of the plane: the conjunction of its constraints (none = the plane).
using AxisRegion = std::vector<AxisConstraint>;

struct AxisAlignedSpec {
  std::vector<AxisRegion> members;
};

/// Checks the member forms against the domain; throws EmptyMember or InvalidSpec.
void validate_interval_spec(const IntervalSpec& spec);

/// Distinct h-values over the domain, found by walking the cells cut out by
/// the endpoints (open gaps and the endpoints themselves; the walk wraps on a
/// circle). Throws NotACover with the uncovered cell, EmptyMember, InvalidSpec.
HPartition hclasses_of_intervals(const IntervalSpec& spec);

/// Distinct h-values over the plane from the grid cut out by every constraint
/// threshold (open cells, threshold lines and their crossings).
HPartition hclasses_axis2d(const AxisAlignedSpec& spec);

inline constexpr std::size_t kDefaultIntervalCap = 5;

/// One representative per isomorphism class (renaming of members) of the
/// h-partitions of covers of `domain` by exactly n single intervals. Endpoint
/// ties are included. Supported domains: segment and line. Throws CapExceeded
/// when n > cap, InvalidArgument for circles or n == 0.
std::vector<HPartition> enumerate_interval_cover_types(const IntervalDomain& domain, std::size_t n,
                                                       std::size_t cap = kDefaultIntervalCap);

/// Upper bound on the number of members the type enumeration can handle.
inline constexpr std::size_t kIntervalHardCap = 6;

}  // namespace coverinv
