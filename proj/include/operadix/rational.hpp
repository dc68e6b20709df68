#pragma once

#include <gmpxx.h>

#include <string>

namespace operadix {

/// Exact rational coefficient type. All coefficient arithmetic in the
/// engine is exact; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Renders `p/q` in lowest terms, omitting the denominator when it is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace operadix
