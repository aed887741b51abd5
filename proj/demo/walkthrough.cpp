// walkthrough.cpp - guided tour of the library: solve the flagship triple
// equation, reduce a census hit, derive effective constants, and inspect the
// abc-triple structure of a quartic hit.

#include <cstdio>

#include <gaplab/gaplab.hpp>

using namespace gaplab;

int main() {
  std::printf("== 1. The triple equation b(b+1)(b+2) = 2 a(a+1)(a+2) ==\n");
  Theorem1Report rep = verify_theorem1();
  std::printf("small-u scan (u <= 4) plus a certified sweep up to the Bennett cutoff u = %u\n",
              rep.bennett_u_max);
  for (const auto& [a, b] : rep.solutions)
    std::printf("  unique solution: a = %s, b = %s\n", a.get_str().c_str(), b.get_str().c_str());
  std::printf("  sweep minimum of u^2 |u 2^(1/3) - v|: %.15g at u = %u (must exceed 5)\n\n",
              rep.min_value.get_d(), rep.min_value_u);

  std::printf("== 2. The Pell family b(b+1) = 2 a(a+1) has infinitely many pairs ==\n");
  for (const auto& [a, b] : pell_pairs(4))
    std::printf("  (a, b) = (%s, %s)\n", a.get_str().c_str(), b.get_str().c_str());
  std::printf("\n");

  std::printf("== 3. Reducing a divisibility hit to a Diophantine approximation ==\n");
  DivisibilityHit hit{Family::CubicTriple, Int(3), Int(4), 1, Int(0)};
  CubicReduction red = reduce_cubic(hit);
  std::printf("  (a, b, l) = (3, 4, 1): t = %s, D = %s, (u, v) = (%s, %s), s = %s\n",
              red.t.get_str().c_str(), red.D.get_str().c_str(), red.u.get_str().c_str(),
              red.v.get_str().c_str(), red.s.get_str().c_str());
  std::printf("  certified: gcd(u, v) = 1, s | (t-1)t(t+1)l^2, |s| <= t^3 l^2,\n");
  std::printf("  and |t - (v/u)^3| <= t^2 l^2 s / u^3 after clearing denominators.\n");
  DivisorChainReport chain = verify_divisor_chain(red.u, red.v, red.t, red.l);
  std::printf("  divisor chain (s into each bound): %s\n\n", chain.all_ok() ? "all ok" : "BROKEN");

  std::printf("== 4. Effective constants for the cubic field Q(cbrt(m)), m = 2 ==\n");
  FieldBounds fb = cubic_field_bounds(Int(2), CubicDiscMode::ExactCandidates);
  std::printf("  discriminant candidates:");
  for (const Int& d : fb.disc_candidates) std::printf(" %s", d.get_str().c_str());
  std::printf("\n  regulator bound m' ln 6m' = %.12g (derived refinement %.12g)\n", fb.reg_bound,
              fb.reg_bound_derived);
  EffectiveMeasure em = bugeaud_measure(3, Int(2));
  std::printf("  irrationality measure: effective exponent slack tau with log10 tau = %.6f\n",
              em.tau.log_magnitude / std::log(10.0));
  std::printf("  cutoff above which the measure beats the trivial bound: log10 T = %.6g\n\n",
              cutoff_cubic(Int(2), 1).log_max / std::log(10.0));

  std::printf("== 5. Quartic hits are abc triples ==\n");
  DivisibilityHit qhit{Family::Quartic, Int(2), Int(12), 1, Int(0)};
  std::vector<AbcTriple> rows = thm4_report({qhit});
  const AbcTriple& row = rows[0];
  std::printf("  (a, b, l) = (2, 12, 1) gives A + B = C with (A, B, C) = (%s, %s, %s)\n",
              row.a.get_str().c_str(), row.b.get_str().c_str(), row.c.get_str().c_str());
  std::printf("  radical = %s, quality ln C / ln rad = %.12f\n", row.rad.get_str().c_str(),
              row.quality);
  return 0;
}
