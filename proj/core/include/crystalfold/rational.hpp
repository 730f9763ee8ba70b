#pragma once

#include <gmpxx.h>

#include <string>

namespace crystalfold {

// All arithmetic in this library is exact: machine integers where values are
// structurally small (crystal statistics, Cartan entries), GMP integers and
// rationals wherever products or eliminations can grow.
using BigInt = mpz_class;
using Rational = mpq_class;

/// gmpxx has no long long overloads; on LP64 targets long is wide enough.
inline BigInt big(long long x) { return BigInt(static_cast<long>(x)); }

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

}  // namespace crystalfold
