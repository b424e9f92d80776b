#include "vietoris/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cstdio>

namespace vietoris {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer decimal_integer(std::string_view s) {
  s.remove_prefix(std::min(s.find_first_not_of('0'), s.size()));
  return s.empty() ? Integer(0) : Integer(std::string{s});
}

Rational pow10(long exponent) {
  Integer p = 1;
  for (long i = 0; i < std::labs(exponent); ++i) p *= 10;
  return exponent >= 0 ? Rational(p) : Rational(Integer(1), p);
}

// Decimal literal with optional fraction and exponent, parsed exactly.
Rational parse_decimal(std::string_view text, std::string_view original) {
  auto fail = [&] { throw InputError("not a rational number: '" + std::string(original) + "'"); };
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    if (!exp_part.empty() && exp_part.front() == '+') exp_part.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
    if (ec != std::errc() || ptr != exp_part.data() + exp_part.size()) fail();
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      fail();
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) fail();
    digits = std::string(text);
  }
  // a leading zero would make GMP read the digits as octal
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  if (digits.empty()) digits = "0";
  return Rational(Integer(digits)) * pow10(exponent);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw InputError("empty rational literal");

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InputError("not a rational number: '" + std::string(original) + "'");
    Integer d = decimal_integer(den);
    if (d == 0) throw InputError("zero denominator in '" + std::string(original) + "'");
    value = Rational(decimal_integer(num), d);
  } else {
    value = parse_decimal(text, original);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_string(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace vietoris
