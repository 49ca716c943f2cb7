#pragma once

#include <gmpxx.h>

#include <string>

namespace flextile {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

/// "p/q" or "p" when the denominator is 1.
inline std::string to_string(const Rational& value) { return value.get_str(); }

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Smallest integer >= value.
inline mpz_class ceil(const Rational& value) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

}  // namespace flextile
