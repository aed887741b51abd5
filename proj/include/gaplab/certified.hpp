#pragma once
// certified.hpp - exact decision procedures for comparisons against real
// n-th roots, via dyadic interval enclosures that are refined until the
// comparison is unambiguous. No floating point is involved.

#include <stdexcept>
#include <utility>

#include "gaplab/bigint.hpp"

namespace gaplab {

enum class GapVerdict { LE, GT };

// [lo, hi] with lo <= t^(1/n) <= hi and hi - lo = 2^-frac_bits.
inline std::pair<Rat, Rat> nth_root_enclosure(const Int& t, unsigned n, unsigned frac_bits) {
  if (n < 2) throw std::invalid_argument("nth_root_enclosure: n must be >= 2");
  if (t < 0) throw std::invalid_argument("nth_root_enclosure: negative radicand");
  Int scaled = t << (static_cast<unsigned long>(frac_bits) * n);
  Int r = integer_nth_root(scaled, n);
  Int den = pow2_int(frac_bits);
  return {make_rat(r, den), make_rat(r + 1, den)};
}

// Decides whether |t^(1/n) - v/u| <= bound (LE) or > bound (GT).
//
// Perfect n-th powers are routed through exact rational arithmetic; for
// irrational roots the enclosure width is doubled until the gap interval
// falls entirely on one side of the bound, which must happen because the
// gap then differs from the rational bound.
inline GapVerdict certified_root_gap(const Int& t, unsigned n, const Int& v, const Int& u,
                                     const Rat& bound) {
  if (t < 2) throw std::invalid_argument("certified_root_gap: t must be >= 2");
  if (n != 3 && n != 4) throw std::invalid_argument("certified_root_gap: n must be 3 or 4");
  if (u < 1) throw std::invalid_argument("certified_root_gap: u must be >= 1");
  if (bound <= 0) throw std::invalid_argument("certified_root_gap: bound must be positive");

  Rat target = make_rat(v, u);
  Int exact_root;
  if (is_perfect_nth_power(t, n, &exact_root)) {
    Rat gap = Rat(exact_root) - target;
    if (gap < 0) gap = -gap;
    return gap <= bound ? GapVerdict::LE : GapVerdict::GT;
  }
  for (unsigned bits = 128;; bits *= 2) {
    std::pair<Rat, Rat> root = nth_root_enclosure(t, n, bits);
    Rat d_lo = root.first - target;
    Rat d_hi = root.second - target;
    Rat gap_lo, gap_hi;
    if (sgn(d_lo) >= 0) {
      gap_lo = d_lo;
      gap_hi = d_hi;
    } else if (sgn(d_hi) <= 0) {
      gap_lo = -d_hi;
      gap_hi = -d_lo;
    } else {
      gap_lo = 0;
      gap_hi = -d_lo > d_hi ? Rat(-d_lo) : d_hi;
    }
    if (gap_hi <= bound) return GapVerdict::LE;
    if (gap_lo > bound) return GapVerdict::GT;
  }
}

}  // namespace gaplab
