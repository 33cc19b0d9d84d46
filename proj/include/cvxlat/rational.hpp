#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cvxlat {

/// Arbitrary-precision rational, always kept in canonical form (q > 0, gcd(p, q) = 1).
using Rat = mpq_class;

/// Parses "p/q" or "p" (optionally signed). Throws InputError on anything else
/// or on a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" form; integers are written with an explicit "/1".
std::string format_rat(const Rat& value);

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace cvxlat
