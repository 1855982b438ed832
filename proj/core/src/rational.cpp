#include "coverinv/rational.hpp"

#include <algorithm>
#include <cctype>

#include "coverinv/error.hpp"

namespace coverinv {
namespace {

[[noreturn]] void bad(std::string_view text, std::string_view why) {
  throw Error(ErrorKind::ParseError, "cannot parse rational '" + std::string(text) + "': " + std::string(why),
              {{"text", std::string(text)}});
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad(whole, "expected an integer");
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text, "empty");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(s.substr(0, slash), text);
    BigInt den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) bad(text, "zero denominator");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty() && frac.empty()) bad(text, "no digits");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac.empty() && !all_digits(frac))) bad(text, "bad decimal");
    BigInt digits(std::string(int_part.empty() ? "0" : int_part) + std::string(frac));
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    Rational r(digits, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ExtRational parse_ext_rational(std::string_view text) {
  if (text == "-inf" || text == "-infinity") return ExtRational::neg_inf();
  if (text == "inf" || text == "+inf" || text == "infinity" || text == "+infinity") return ExtRational::pos_inf();
  return ExtRational(parse_rational(text));
}

std::string to_string(const ExtRational& r) {
  switch (r.kind()) {
    case ExtRational::Kind::NegInf: return "-inf";
    case ExtRational::Kind::PosInf: return "inf";
    case ExtRational::Kind::Finite: break;
  }
  return to_string(r.value());
}

}  // namespace coverinv
