#pragma once
// bigint.hpp - thin helpers over GMP's mpz_class / mpq_class.

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gaplab {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int pow2_int(unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
  return r;
}

inline Int pow10_int(unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exp);
  return r;
}

// floor(value^(1/n)), exact integer arithmetic throughout.
inline Int integer_nth_root(const Int& value, unsigned n) {
  if (n < 2) throw std::invalid_argument("integer_nth_root: n must be >= 2");
  if (value < 0) throw std::invalid_argument("integer_nth_root: negative radicand");
  Int r;
  mpz_root(r.get_mpz_t(), value.get_mpz_t(), n);
  return r;
}

inline bool is_perfect_nth_power(const Int& value, unsigned n, Int* root = nullptr) {
  if (n < 2) throw std::invalid_argument("is_perfect_nth_power: n must be >= 2");
  if (value < 0) throw std::invalid_argument("is_perfect_nth_power: negative value");
  Int r;
  bool exact = mpz_root(r.get_mpz_t(), value.get_mpz_t(), n) != 0;
  if (root) *root = r;
  return exact;
}

// ln|n| computed from the mantissa/exponent split, accurate for n far beyond
// double range.
inline double log_int(const Int& n) {
  if (n == 0) throw std::invalid_argument("log_int: zero argument");
  signed long e2;
  double mant = mpz_get_d_2exp(&e2, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(e2) * 0.69314718055994531;
}

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

}  // namespace gaplab
