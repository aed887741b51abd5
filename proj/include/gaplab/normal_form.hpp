#pragma once
// normal_form.hpp - cube-full / fourth-power-full normal forms of an integer,
// read off its prime factorization by exponent residue.

#include <stdexcept>

#include "gaplab/bigint.hpp"
#include "gaplab/factorization.hpp"

namespace gaplab {

// m = a * b^2 * c^3 with a, b squarefree and coprime.
struct CubicNormalForm {
  Int a = 1;
  Int b = 1;
  Int c = 1;
  Int m = 1;
};

inline CubicNormalForm cubic_normal_form(const Int& m) {
  if (m < 2) throw std::invalid_argument("cubic_normal_form: m must be >= 2");
  CubicNormalForm f;
  f.m = m;
  for (const auto& [p, e] : factorize(m)) {
    switch (e % 3) {
      case 1: f.a *= p; break;
      case 2: f.b *= p; break;
      default: break;
    }
    if (e >= 3) f.c *= pow_int(p, e / 3);
  }
  return f;
}

// m = u * v^2 * w^3 * s^4 with u, v, w squarefree and pairwise coprime.
struct QuarticNormalForm {
  Int u = 1;
  Int v = 1;
  Int w = 1;
  Int s = 1;
  Int m = 1;
};

inline QuarticNormalForm quartic_normal_form(const Int& m) {
  if (m < 2) throw std::invalid_argument("quartic_normal_form: m must be >= 2");
  QuarticNormalForm f;
  f.m = m;
  for (const auto& [p, e] : factorize(m)) {
    switch (e % 4) {
      case 1: f.u *= p; break;
      case 2: f.v *= p; break;
      case 3: f.w *= p; break;
      default: break;
    }
    if (e >= 4) f.s *= pow_int(p, e / 4);
  }
  return f;
}

}  // namespace gaplab
