#pragma once
// effective.hpp - effective constants for the root-approximation bounds:
// discriminant and regulator bounds for Q(m^(1/3)) and Q(m^(1/4)), Bugeaud's
// irrationality measure constants, Bennett's gap for 2^(1/3), the cutoff
// chains bounding solution height, and the resulting minimal-t / gap floors.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gaplab/bigarith.hpp"
#include "gaplab/reduction.hpp"

namespace gaplab {

enum class CubicDiscMode { BoundsOnly, ExactCandidates };

struct FieldBounds {
  unsigned degree = 3;
  Int m;
  Int m_reduced;                     // a b^2 (cubic) or u v^2 w^3 (quartic)
  Int disc_bound;                    // |d_K| <= disc_bound
  std::vector<Int> disc_candidates;  // possible exact discriminants, all negative
  double reg_bound = 0.0;            // simplified closed-form regulator bound
  double reg_bound_derived = 0.0;    // from the class-number-regulator inequality
};

// For K = Q(m^(1/3)) with m' = a b^2 cubefree: d_K is -3 a^2 b^2 when
// m'^2 = 1 (mod 9) (Dedekind) and -27 a^2 b^2 otherwise, so |d_K| <= 27 (a b)^2.
// The regulator bound m' ln(6 m') follows from the class-number-regulator
// inequality h R < (1 / (6 sqrt 3)) sqrt|d| ln|d|.
inline FieldBounds cubic_field_bounds(const Int& m, CubicDiscMode mode = CubicDiscMode::BoundsOnly) {
  if (m < 2) throw std::invalid_argument("cubic_field_bounds: m must be >= 2");
  if (is_perfect_nth_power(m, 3))
    throw std::invalid_argument("cubic_field_bounds: m is a perfect cube");
  CubicNormalForm nf = cubic_normal_form(m);
  FieldBounds fb;
  fb.degree = 3;
  fb.m = m;
  fb.m_reduced = nf.a * nf.b * nf.b;
  Int ab2 = nf.a * nf.a * nf.b * nf.b;
  fb.disc_bound = 27 * ab2;
  Int type2 = (fb.m_reduced * fb.m_reduced) % 9;
  if (mode == CubicDiscMode::ExactCandidates) {
    fb.disc_candidates = {type2 == 1 ? -3 * ab2 : -27 * ab2};
  } else {
    fb.disc_candidates = {-27 * ab2, -3 * ab2};
  }
  double mr = fb.m_reduced.get_d();
  fb.reg_bound = mr * (std::log(6.0) + log_int(fb.m_reduced));
  double db = fb.disc_bound.get_d();
  fb.reg_bound_derived = std::sqrt(db) * std::log(db) / (6.0 * std::sqrt(3.0));
  detail::verify(fb.reg_bound_derived <= fb.reg_bound,
                 "cubic_field_bounds: derived regulator bound exceeds the simplified one");
  return fb;
}

namespace detail {

// Funakura's discriminant for K = Q(m^(1/4)): with m reduced to A B^2 C^3
// (A, B, C squarefree, pairwise coprime, C odd, A != 1, A >= C when A is odd),
// d_K = -2^e A^3 B^2 C^3 where e depends only on A B^2 C^3 mod 32.
inline unsigned quartic_two_exponent(const Int& mf) {
  unsigned long r = mpz_fdiv_ui(mf.get_mpz_t(), 32);
  if (r % 8 == 1 || r == 28) return 2;
  if (r % 16 == 4 || r % 8 == 5 || r == 12) return 4;
  if (r % 4 == 2 || r % 4 == 3) return 8;
  throw verification_error("quartic_two_exponent: residue class not covered");
}

}  // namespace detail

inline FieldBounds quartic_field_bounds(const Int& m) {
  if (m < 2) throw std::invalid_argument("quartic_field_bounds: m must be >= 2");
  if (is_perfect_nth_power(m, 2))
    throw std::invalid_argument("quartic_field_bounds: m is a perfect square");
  QuarticNormalForm nf = quartic_normal_form(m);
  FieldBounds fb;
  fb.degree = 4;
  fb.m = m;
  fb.m_reduced = nf.u * nf.v * nf.v * nf.w * nf.w * nf.w;

  // Q(m^(1/4)) = Q((u v^2 w^3)^(1/4)) = Q((w v^2 u^3)^(1/4)); pick the
  // representative meeting Funakura's side conditions.
  Int A = nf.u, C = nf.w;
  bool u_even = mpz_even_p(nf.u.get_mpz_t()) != 0;
  bool w_even = mpz_even_p(nf.w.get_mpz_t()) != 0;
  if (!u_even && (w_even || nf.u < nf.w || nf.u == 1)) std::swap(A, C);
  const Int& B = nf.v;
  detail::verify(A != 1, "quartic_field_bounds: representative has A = 1");
  detail::verify(gcd(A, B) == 1 && gcd(A, C) == 1 && gcd(B, C) == 1,
                 "quartic_field_bounds: representative not pairwise coprime");
  detail::verify(is_squarefree(A) && is_squarefree(B) && is_squarefree(C),
                 "quartic_field_bounds: representative not squarefree");
  detail::verify(mpz_odd_p(C.get_mpz_t()) != 0, "quartic_field_bounds: C is even");
  detail::verify(mpz_even_p(A.get_mpz_t()) != 0 || A >= C,
                 "quartic_field_bounds: odd A smaller than C");
  Int mf = A * B * B * C * C * C;
  detail::verify(mf != -4, "quartic_field_bounds: excluded field");
  unsigned e = detail::quartic_two_exponent(mf);
  Int exact = -(pow2_int(e) * A * A * A * B * B * C * C * C);
  fb.disc_candidates = {exact};
  fb.disc_bound = 256 * fb.m_reduced * fb.m_reduced * fb.m_reduced;
  detail::verify(abs(exact) <= fb.disc_bound,
                 "quartic_field_bounds: exact discriminant exceeds the bound");

  double mr = fb.m_reduced.get_d();
  double l8 = std::log(8.0) + log_int(fb.m_reduced);
  fb.reg_bound = 15.0 * mr * std::sqrt(mr) * l8 * l8 * l8;
  double ldb = log_int(fb.disc_bound);
  fb.reg_bound_derived = (16.0 / 27.0) * std::sqrt(fb.disc_bound.get_d()) * ldb * ldb * ldb;
  return fb;
}

// Bugeaud's effective irrationality measure for m^(1/n):
//   |m^(1/n) - p/q| > c / q^(n - tau)  with
//   c = A^(-n^2) exp(-10^(27 n) n^(14 n) R),  tau = (10^(26 n) n^(14 n) R)^(-1),
// where A = max(e, m) and R bounds the regulator of Q(m^(1/n)).
struct EffectiveMeasure {
  unsigned degree = 3;
  Int m;
  double height_bound = 0.0;     // A
  double regulator_bound = 0.0;  // R
  LogReal c_log;                 // ln c, hugely negative
  LogReal tau;                   // the exponent defect, hugely small
  bool chain_inequality_ok = true;
};

inline EffectiveMeasure bugeaud_measure(unsigned n, const Int& m) {
  if (n != 3 && n != 4) throw std::invalid_argument("bugeaud_measure: degree must be 3 or 4");
  FieldBounds fb = n == 3 ? cubic_field_bounds(m) : quartic_field_bounds(m);
  EffectiveMeasure em;
  em.degree = n;
  em.m = m;
  em.regulator_bound = fb.reg_bound;
  double ln_m = log_int(m);
  double ln_a = std::max(1.0, ln_m);
  em.height_bound = std::max(std::exp(1.0), m.get_d());

  Int n14n = pow_int(Int(n), 14 * n);
  Int kc = pow10_int(27 * n) * n14n;
  Int kt = pow10_int(26 * n) * n14n;
  LogReal height_term = LogReal::from_log(-1, std::log(double(n * n) * ln_a));
  LogReal reg_term = -(LogReal::from_integer(kc) * LogReal::from_value(em.regulator_bound));
  em.c_log = height_term + reg_term;
  em.tau = LogReal::from_log(1, -(log_int(kt) + std::log(em.regulator_bound)));

  if (n == 3) {
    // With m = t and R <= t ln 6t the measure constant folds into 10^99 t ln 6t.
    double lhs = 78.0 * std::log(10.0) + 42.0 * std::log(3.0) + std::log(em.regulator_bound);
    double rhs = 99.0 * std::log(10.0) + ln_m + std::log(std::log(6.0) + ln_m);
    em.chain_inequality_ok = lhs <= rhs;
    detail::verify(em.chain_inequality_ok, "bugeaud_measure: folding inequality failed");
  }
  return em;
}

// Bennett: |2^(1/3) - v/u| > 1 / (4 u^2.45) for all integers u >= 1. Returns
// a certified rational lower bound for the right side (exact when u^49 is a
// perfect 20th power, within 2^-64 relative slack otherwise).
inline Rat bennett_gap(const Int& u) {
  if (u < 1) throw std::invalid_argument("bennett_gap: u must be >= 1");
  Int u49 = pow_int(u, 49);
  Int root;
  if (is_perfect_nth_power(u49, 20, &root)) return make_rat(1, 4 * root);
  const unsigned k = 64;
  Int scaled = u49 << (20 * k);
  Int r = integer_nth_root(scaled, 20);  // r <= 2^k u^2.45 < r + 1
  return make_rat(pow2_int(k), 4 * (r + 1));
}

// The chain of height cutoffs: any divisibility hit with parameters (t, l)
// has its solution height bounded by exp(raw_log_max), which is folded into
// progressively simpler (and weaker) closed forms.
struct CutoffChain {
  unsigned degree = 3;
  Int t;
  long l = 1;
  double raw_denom_exponent = 0.0;
  double raw_log_max = 0.0;
  std::optional<double> intermediate_log_max;
  double log_max = 0.0;  // simplified closed form
};

inline CutoffChain cutoff_cubic(const Int& t, long l) {
  if (t < 2) throw std::invalid_argument("cutoff_cubic: t must be >= 2");
  if (l < 1) throw std::invalid_argument("cutoff_cubic: l must be >= 1");
  CutoffChain c;
  c.degree = 3;
  c.t = t;
  c.l = l;
  double td = t.get_d();
  double lt = log_int(t);
  double l6t = std::log(6.0) + lt;
  double ll = std::log(double(l));
  c.raw_denom_exponent = 1e99 * td * l6t;
  c.raw_log_max = c.raw_denom_exponent * (2.0 * ll + (34.0 / 3.0) * lt + 1e102 * td * l6t);
  c.intermediate_log_max =
      1e201 * (td * td * l6t * l6t + td * l6t * l6t + 2.0 * ll * td * l6t);
  c.log_max = 1e202 * (1.0 + ll) * td * td * l6t * l6t;
  detail::verify(c.raw_log_max <= *c.intermediate_log_max && *c.intermediate_log_max <= c.log_max,
                 "cutoff_cubic: chain ordering violated");
  return c;
}

inline CutoffChain cutoff_quartic(const Int& t, long l) {
  if (t < 2) throw std::invalid_argument("cutoff_quartic: t must be >= 2");
  if (l == 0) throw std::invalid_argument("cutoff_quartic: l must be non-zero");
  CutoffChain c;
  c.degree = 4;
  c.t = t;
  c.l = l;
  double td = t.get_d();
  double lt = log_int(t);
  double l8t = std::log(8.0) + lt;
  double la = std::abs(double(l));
  double t32 = td * std::sqrt(td);
  c.raw_denom_exponent = 1e142 * t32 * l8t * l8t * l8t;
  c.raw_log_max =
      c.raw_denom_exponent * (std::log(la) + (69.0 / 4.0) * lt + 1e143 * t32 * l8t * l8t * l8t);
  double l8t3 = l8t * l8t * l8t;
  c.log_max = 1e286 * std::log(la + 2.0) * td * td * td * l8t3 * l8t3;
  detail::verify(c.raw_log_max <= c.log_max, "cutoff_quartic: chain ordering violated");
  return c;
}

// Inverting the simplified cutoffs: below these t values the closed form
// cannot certify a hit with the given (a, l), so any hit must have t at least
// this large. Meaningful once ln ln a > 1, hence the a >= 16 floor.
inline double min_t_cubic(const Int& a, long l) {
  if (a < 16) throw std::invalid_argument("min_t_cubic: a must be >= 16");
  if (l < 1) throw std::invalid_argument("min_t_cubic: l must be >= 1");
  double la = log_int(a);
  return std::sqrt(la) / (1e103 * std::sqrt(1.0 + std::log(double(l))) * std::log(la));
}

inline double min_t_quartic(const Int& a, long l) {
  if (a < 16) throw std::invalid_argument("min_t_quartic: a must be >= 16");
  if (l == 0) throw std::invalid_argument("min_t_quartic: l must be non-zero");
  double la = log_int(a);
  double lla = std::log(la);
  double lfac = std::cbrt(std::log(std::abs(double(l)) + 2.0));
  return std::cbrt(la) / (1e97 * lfac * lla * lla);
}

// Lower bound on the gap b - a of a hit at (a, l): t >= min_t forces
// b ~ t^(1/n) a to exceed a by at least this much.
inline double gap_lower_bound(const Int& a, long l, Family family) {
  if (family == Family::CubicTriple) return std::cbrt(min_t_cubic(a, l)) * a.get_d();
  return 0.9 * std::pow(min_t_quartic(a, l), 0.25) * a.get_d();
}

// Quality of an abc triple A + B = C with gcd(A, B) = 1:
// ln C / ln rad(A B C).
inline double abc_quality(const Int& a, const Int& b, const Int& c) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("abc_quality: entries must be positive");
  if (a + b != c) throw std::invalid_argument("abc_quality: a + b != c");
  if (gcd(a, b) != 1) throw std::invalid_argument("abc_quality: a, b are not coprime");
  Int rad = radical(a * b * c);
  return log_int(c) / log_int(rad);
}

}  // namespace gaplab
