#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "sck/error.hpp"

namespace sck {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms with q > 0; integers print without the "/1".
inline std::string rat_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Accepts "p", "-p" and "p/q"; rejects q = 0 and garbage.
inline Rat parse_rat(const std::string& s) {
  auto bad = [&]() { fail("ParseError", "not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat();  // unreachable
}

inline bool is_dyadic(const Rat& x) {
  Int d = denominator(x);
  while (d % 2 == 0) d /= 2;
  return d == 1;
}

inline Rat pow2(unsigned k) {
  Int v = Int(1) << k;
  return Rat(v);
}

}  // namespace sck
