#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semind {

// Exact arbitrary-precision fraction. All identities, densities and
// certificate arithmetic go through this type; floating point is reserved
// for the numeric optimizers.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat_i64(std::int64_t num, std::int64_t den = 1) {
  Rational r;
  mpz_class n, d;
  n = static_cast<long>(num >> 32);
  n <<= 32;
  n += static_cast<unsigned long>(num & 0xffffffffULL);
  d = static_cast<long>(den >> 32);
  d <<= 32;
  d += static_cast<unsigned long>(den & 0xffffffffULL);
  r = Rational(n) / Rational(d);
  r.canonicalize();
  return r;
}

// Canonical "p/q" form, q > 0, always with the slash so parsers stay simple.
inline std::string rat_str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  Rational r;
  if (slash == std::string::npos) {
    r = Rational(s);
  } else {
    r = Rational(s.substr(0, slash)) / Rational(s.substr(slash + 1));
  }
  r.canonicalize();
  return r;
}

inline double rat_double(const Rational& r) { return r.get_d(); }

}  // namespace semind
