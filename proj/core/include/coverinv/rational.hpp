#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace coverinv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p", "p/q" (either sign placement) and plain decimals "1.25".
/// Throws ParseError otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// A rational extended by -inf/+inf, for interval endpoints on the full line.
class ExtRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRational() = default;
  ExtRational(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT: implicit by intent
  ExtRational(int v) : ExtRational(Rational(v)) {}                        // NOLINT

  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }
  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }

  Kind kind() const noexcept { return kind_; }
  bool finite() const noexcept { return kind_ == Kind::Finite; }
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit ExtRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_{0};
};

/// "-inf"/"inf"/"+inf" or a rational.
ExtRational parse_ext_rational(std::string_view text);
std::string to_string(const ExtRational& r);

}  // namespace coverinv
