#pragma once
// reduction.hpp - exact coordinate changes from divisibility instances
//
//   b(b+l)(b+2l) = t a(a+l)(a+2l)      (triple family)
//   b^2(b^2+l)   = t a^2(a^2+l)        (quartic family)
//
// to coprime root-approximation form. Every side condition is re-verified in
// integer arithmetic; no floating point is involved anywhere in this header.

#include <stdexcept>
#include <string>
#include <vector>

#include "gaplab/bigarith.hpp"

namespace gaplab {

enum class Family { CubicTriple, Quartic };

inline const char* family_name(Family f) {
  return f == Family::CubicTriple ? "cubic" : "quartic";
}

struct DivisibilityHit {
  Family family = Family::CubicTriple;
  Int a;
  Int b;
  long l = 1;
  Int t;  // quotient of the two products; 0 means "recompute on use"
};

inline Int triple_product(const Int& v, long l) { return v * (v + l) * (v + 2 * l); }
inline Int quartic_product(const Int& v, long l) { return v * v * (v * v + l); }

inline Int family_product(Family f, const Int& v, long l) {
  return f == Family::CubicTriple ? triple_product(v, l) : quartic_product(v, l);
}

namespace detail {

inline void verify(bool ok, const std::string& what) {
  if (!ok) throw verification_error(what);
}

// Validates the hit's shape and returns the exact quotient t >= 2.
inline Int exact_quotient(const DivisibilityHit& hit) {
  if (hit.a < 1) throw std::invalid_argument("hit: a must be >= 1");
  if (hit.b <= hit.a) throw std::invalid_argument("hit: b must exceed a");
  if (hit.family == Family::CubicTriple && hit.l < 1)
    throw std::invalid_argument("hit: l must be >= 1 for the triple family");
  if (hit.family == Family::Quartic && hit.l == 0)
    throw std::invalid_argument("hit: l must be non-zero for the quartic family");
  Int pa = family_product(hit.family, hit.a, hit.l);
  if (pa == 0) throw std::invalid_argument("hit: a^2 + l vanishes");
  Int pb = family_product(hit.family, hit.b, hit.l);
  if (!mpz_divisible_p(pb.get_mpz_t(), pa.get_mpz_t()))
    throw std::invalid_argument("hit: products are not divisible");
  Int t = pb / pa;
  if (t < 2) throw std::invalid_argument("hit: quotient must be >= 2");
  if (hit.t != 0 && hit.t != t)
    throw std::invalid_argument("hit: stored t disagrees with the exact quotient");
  return t;
}

// |t^(1/3) - v/u| <= t^(7/3) l^2 / u^3, decided in integers by cubing the
// side of the case split determined by v^3 vs t u^3.
inline bool cubic_divided_gap_holds(const Int& t, const Int& u, const Int& v, long l) {
  Int l2 = Int(l) * l;
  Int u3 = u * u * u;
  Int v3 = v * v * v;
  Int t2l2 = t * t * l2;
  Int v3u6 = v3 * u3 * u3;
  if (v3 <= t * u3) {
    Int m = u3 - t2l2;
    if (m <= 0) return true;
    return t * m * m * m <= v3u6;
  }
  Int p = u3 + t2l2;
  return v3u6 <= t * p * p * p;
}

// |t^(1/4) - y/x| <= |l| t^(5/4) / x^4, same technique with fourth powers.
inline bool quartic_divided_gap_holds(const Int& t, const Int& x, const Int& y, long l) {
  Int la = l >= 0 ? Int(l) : Int(-l);
  Int x4 = x * x * x * x;
  Int y4 = y * y * y * y;
  Int lt = la * t;
  Int y4x12 = y4 * x4 * x4 * x4;
  if (y4 <= t * x4) {
    Int m = x4 - lt;
    if (m <= 0) return true;
    Int m2 = m * m;
    return t * m2 * m2 <= y4x12;
  }
  Int p = x4 + lt;
  Int p2 = p * p;
  return y4x12 <= t * p2 * p2;
}

}  // namespace detail

struct CubicReduction {
  Int a, b;
  long l = 1;
  Int t;
  Int x, y;  // x = a + l, y = b + l
  Int D;     // gcd(x, y)
  Int u, v;  // x = D u, y = D v
  Int s;     // v^3 - t u^3 = -s
  int s_sign = 0;                 // recorded, not asserted
  bool dioph_integer_ok = false;  // |t u^3 - v^3| <= t^3 l^2
  bool dioph_divided_ok = false;  // |t^(1/3) - v/u| <= t^(7/3) l^2 / u^3
};

inline CubicReduction reduce_cubic(const DivisibilityHit& hit) {
  if (hit.family != Family::CubicTriple)
    throw std::invalid_argument("reduce_cubic: hit is not from the triple family");
  CubicReduction r;
  r.a = hit.a;
  r.b = hit.b;
  r.l = hit.l;
  r.t = detail::exact_quotient(hit);
  r.x = hit.a + hit.l;
  r.y = hit.b + hit.l;
  r.D = gcd(r.x, r.y);
  r.u = r.x / r.D;
  r.v = r.y / r.D;
  detail::verify(gcd(r.u, r.v) == 1, "reduce_cubic: u, v are not coprime");

  Int l2 = Int(r.l) * r.l;
  Int d2 = r.D * r.D;
  Int num = (r.t * r.u - r.v) * l2;
  detail::verify(mpz_divisible_p(num.get_mpz_t(), d2.get_mpz_t()),
                 "reduce_cubic: D^2 does not divide (t u - v) l^2");
  r.s = num / d2;
  detail::verify(r.v * r.v * r.v - r.t * r.u * r.u * r.u == -r.s,
                 "reduce_cubic: v^3 - t u^3 != -s");
  Int chain_bound = (r.t - 1) * r.t * (r.t + 1) * l2;
  detail::verify(mpz_divisible_p(chain_bound.get_mpz_t(), r.s.get_mpz_t()),
                 "reduce_cubic: s does not divide (t-1) t (t+1) l^2");
  Int t3l2 = r.t * r.t * r.t * l2;
  detail::verify(abs(r.s) <= t3l2, "reduce_cubic: |s| exceeds t^3 l^2");
  r.dioph_integer_ok = abs(r.t * pow_int(r.u, 3) - pow_int(r.v, 3)) <= t3l2;
  detail::verify(r.dioph_integer_ok, "reduce_cubic: integer approximation bound fails");
  r.dioph_divided_ok = detail::cubic_divided_gap_holds(r.t, r.u, r.v, r.l);
  r.s_sign = sgn(r.s);
  return r;
}

struct DivisorChainLink {
  std::string divisor_expr;  // what s must divide
  Int divisor_value;
  Int gcd_with_residual;  // gcd(divisor_value, v^3 - t u^3)
  bool s_divides = false;
};

struct DivisorChainReport {
  Int u, v, t;
  long l = 1;
  Int s;  // t u^3 - v^3
  bool u3_coprime = false;
  std::vector<DivisorChainLink> links;

  bool all_ok() const {
    if (!u3_coprime) return false;
    for (const DivisorChainLink& link : links) {
      if (!link.s_divides) return false;
    }
    return true;
  }
};

// Re-derives the divisor chain
//   s | (t u - v) l^2  and  s | v^3 - t u^3
//     => s | (t^3 u^3 - v^3) l^2  => s | (t^3 - t) l^2 u^3
//     => s | (t - 1) t (t + 1) l^2,
// the last step using gcd(u^3, v^3 - t u^3) = 1.
inline DivisorChainReport verify_divisor_chain(const Int& u, const Int& v, const Int& t, long l) {
  if (u < 1 || v < 1) throw std::invalid_argument("verify_divisor_chain: u, v must be positive");
  if (t < 2) throw std::invalid_argument("verify_divisor_chain: t must be >= 2");
  if (l < 1) throw std::invalid_argument("verify_divisor_chain: l must be >= 1");
  if (gcd(u, v) != 1) throw std::invalid_argument("verify_divisor_chain: u, v are not coprime");

  DivisorChainReport rep;
  rep.u = u;
  rep.v = v;
  rep.t = t;
  rep.l = l;
  Int l2 = Int(l) * l;
  Int u3 = u * u * u;
  Int v3 = v * v * v;
  Int residual = v3 - t * u3;
  rep.s = -residual;
  rep.u3_coprime = gcd(u3, residual) == 1;

  auto add_link = [&](std::string expr, Int value) {
    DivisorChainLink link;
    link.divisor_expr = std::move(expr);
    link.gcd_with_residual = gcd(value, residual);
    link.s_divides = mpz_divisible_p(value.get_mpz_t(), rep.s.get_mpz_t()) != 0;
    link.divisor_value = std::move(value);
    rep.links.push_back(std::move(link));
  };
  add_link("(t u - v) l^2", (t * u - v) * l2);
  add_link("(t^3 u^3 - v^3) l^2", (t * t * t * u3 - v3) * l2);
  add_link("(t^3 - t) l^2 u^3", (t * t * t - t) * l2 * u3);
  add_link("(t - 1) t (t + 1) l^2", (t - 1) * t * (t + 1) * l2);
  return rep;
}

enum class SizeStatus { Holds, Fails, BelowThreshold };

inline const char* size_status_name(SizeStatus s) {
  switch (s) {
    case SizeStatus::Holds: return "holds";
    case SizeStatus::Fails: return "fails";
    default: return "below-threshold";
  }
}

struct QuarticReduction {
  Int a, b;
  long l = 1;
  Int t;
  Int D;     // gcd(a, b)
  Int x, y;  // a = D x, b = D y
  Int s;     // y^4 - t x^4 = s = l (t x^2 - y^2) / D^2
  int s_sign = 0;
  bool above_threshold = false;  // x > 10 (|l| + 1)
  // The three asymptotic inequalities, evaluated exactly and reported
  // three-valued because they are only claimed for x large relative to l.
  SizeStatus size_y = SizeStatus::BelowThreshold;    // 0.9 t^(1/4) x < y < 1.1 t^(1/4) x
  SizeStatus size_D = SizeStatus::BelowThreshold;    // 0.3 x / sqrt(t) <= D <= sqrt(|l| t) x
  SizeStatus root_gap = SizeStatus::BelowThreshold;  // |t^(1/4) - y/x| <= |l| t^(5/4) / x^4
};

inline QuarticReduction reduce_quartic(const DivisibilityHit& hit) {
  if (hit.family != Family::Quartic)
    throw std::invalid_argument("reduce_quartic: hit is not from the quartic family");
  QuarticReduction r;
  r.a = hit.a;
  r.b = hit.b;
  r.l = hit.l;
  r.t = detail::exact_quotient(hit);
  r.D = gcd(r.a, r.b);
  r.x = r.a / r.D;
  r.y = r.b / r.D;
  detail::verify(gcd(r.x, r.y) == 1, "reduce_quartic: x, y are not coprime");

  Int d2 = r.D * r.D;
  Int num = Int(r.l) * (r.t * r.x * r.x - r.y * r.y);
  detail::verify(mpz_divisible_p(num.get_mpz_t(), d2.get_mpz_t()),
                 "reduce_quartic: D^2 does not divide l (t x^2 - y^2)");
  r.s = num / d2;
  detail::verify(pow_int(r.y, 4) - r.t * pow_int(r.x, 4) == r.s,
                 "reduce_quartic: y^4 - t x^4 != s");
  if (r.s == 0) throw verification_error("reduce_quartic: s = 0 contradicts t >= 2");
  Int chain_bound = Int(r.l) * r.t * (r.t - 1);
  detail::verify(mpz_divisible_p(chain_bound.get_mpz_t(), r.s.get_mpz_t()),
                 "reduce_quartic: s does not divide l t (t - 1)");
  r.s_sign = sgn(r.s);
  detail::verify(r.s_sign == sgn(Int(r.l)) * sgn(r.a * r.a + r.l),
                 "reduce_quartic: sign of s disagrees with sign of l (a^2 + l)");

  Int la = r.l >= 0 ? Int(r.l) : Int(-r.l);
  r.above_threshold = r.x > 10 * (la + 1);
  auto grade = [&](bool holds) {
    if (holds) return SizeStatus::Holds;
    return r.above_threshold ? SizeStatus::Fails : SizeStatus::BelowThreshold;
  };
  Int tx4 = r.t * pow_int(r.x, 4);
  Int y4_scaled = 10000 * pow_int(r.y, 4);
  r.size_y = grade(6561 * tx4 < y4_scaled && y4_scaled < 14641 * tx4);
  r.size_D = grade(9 * r.x * r.x <= 100 * d2 * r.t && d2 <= la * r.t * r.x * r.x);
  r.root_gap = grade(detail::quartic_divided_gap_holds(r.t, r.x, r.y, r.l));
  return r;
}

}  // namespace gaplab
