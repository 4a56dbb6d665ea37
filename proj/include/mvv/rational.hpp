#pragma once

#include <gmpxx.h>

#include <string>

#include "mvv/errors.hpp"

namespace mvv {

/// Exact arbitrary-precision rational. Every value is kept canonical:
/// denominator > 0 and gcd(numerator, denominator) = 1. There is no
/// floating point anywhere in the library; all dimension decisions reduce
/// to exact ranks of rational matrices.
using rational = mpq_class;
using bigint = mpz_class;

inline rational make_rational(long num, long den = 1) {
  rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "a/b" or "a" (optional sign, arbitrary precision). Throws
/// parse_error on malformed input or zero denominator.
inline rational rational_from_string(const std::string& text) {
  mpq_t raw;
  mpq_init(raw);
  if (text.empty() || mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw parse_error("invalid rational literal: \"" + text + "\"");
  }
  rational q(raw);
  mpq_clear(raw);
  if (q.get_den() == 0) throw parse_error("zero denominator in rational: \"" + text + "\"");
  q.canonicalize();
  return q;
}

/// Canonical form "a/b" with b > 0 and gcd(a, b) = 1; integers render as "a/1".
inline std::string rational_to_string(const rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace mvv
