#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace valtop {

// All arithmetic in the library is exact. Integers and rationals are
// arbitrary precision; nothing ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }
inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline Int floor_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q;
}

std::string rat_str(const Rat& r);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
Rat parse_rat(std::string_view text);

}  // namespace valtop
