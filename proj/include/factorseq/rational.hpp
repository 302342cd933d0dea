#pragma once

#include <boost/rational.hpp>
#include <cctype>
#include <limits>
#include <string>
#include <string_view>

#include "factorseq/errors.hpp"

namespace factorseq {

// Toughness parameters are exact rationals; doubles would misclassify the
// boundary cases (e.g. t = 3/2 at i = 3).
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& t) {
  if (t.denominator() == 1) return std::to_string(t.numerator());
  return std::to_string(t.numerator()) + "/" + std::to_string(t.denominator());
}

// Accepts "p" or "p/q" with optional surrounding whitespace; q > 0.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) fail(errc::bad_t, "empty rational");

  auto parse_int = [&](std::string_view part) -> long long {
    part = trim(part);
    if (part.empty()) fail(errc::bad_t, "missing integer in rational");
    std::size_t pos = 0;
    bool neg = false;
    if (part[0] == '-' || part[0] == '+') {
      neg = part[0] == '-';
      pos = 1;
    }
    if (pos == part.size()) fail(errc::bad_t, "missing digits in rational");
    long long value = 0;
    for (; pos < part.size(); ++pos) {
      char c = part[pos];
      if (c < '0' || c > '9') fail(errc::bad_t, "bad character in rational: '" + std::string(part) + "'");
      value = value * 10 + (c - '0');
      // generous cap that keeps every downstream cross-multiplication in range
      if (value > 1'000'000'000) fail(errc::bad_t, "rational component too large");
    }
    return neg ? -value : value;
  };

  auto slash = text.find('/');
  long long num, den = 1;
  if (slash == std::string_view::npos) {
    num = parse_int(text);
  } else {
    num = parse_int(text.substr(0, slash));
    den = parse_int(text.substr(slash + 1));
    if (den <= 0) fail(errc::bad_t, "denominator must be positive");
  }
  return Rational(num, den);
}

// floor(i / t) for i >= 0, t > 0, computed without leaving the integers.
inline long long floor_div(long long i, const Rational& t) {
  return (i * t.denominator()) / t.numerator();
}

// smallest integer >= t, t > 0
inline long long ceil_of(const Rational& t) {
  return (t.numerator() + t.denominator() - 1) / t.denominator();
}

}  // namespace factorseq
