#pragma once
// reports.hpp - tabulations over search output: b/a ratios of hits against
// the formula floors with per-decade buckets, and the abc-triple structure
// carried by every quartic hit.

#include <map>
#include <optional>
#include <vector>

#include "gaplab/bigarith.hpp"
#include "gaplab/effective.hpp"
#include "gaplab/reduction.hpp"

namespace gaplab {

struct GapRow {
  DivisibilityHit hit;
  double ratio = 0.0;  // b / a
  bool invariants_ok = false;
  std::optional<double> formula_bound;  // gap_lower_bound, once a >= 16
};

struct GapBucket {
  Int a_lo, a_hi;  // decade [10^k, 10^(k+1))
  std::size_t hits = 0;
  double min_ratio = 0.0;
};

struct GapReport {
  std::vector<GapRow> rows;
  std::vector<GapBucket> buckets;
  std::size_t violations = 0;  // hits whose reduction invariants failed
};

inline GapReport gap_report(const std::vector<DivisibilityHit>& hits) {
  if (hits.empty()) throw std::invalid_argument("gap_report: no hits");
  GapReport rep;
  rep.rows.reserve(hits.size());
  std::map<unsigned long, GapBucket> buckets;
  for (const DivisibilityHit& hit : hits) {
    GapRow row;
    row.hit = hit;
    row.ratio = hit.b.get_d() / hit.a.get_d();
    try {
      if (hit.family == Family::CubicTriple)
        reduce_cubic(hit);
      else
        reduce_quartic(hit);
      row.invariants_ok = true;
    } catch (const std::exception&) {
      row.invariants_ok = false;
      ++rep.violations;
    }
    if (hit.a >= 16) row.formula_bound = gap_lower_bound(hit.a, hit.l, hit.family);

    unsigned long digits = mpz_sizeinbase(hit.a.get_mpz_t(), 10);  // exact or one too big
    if (digits > 1 && hit.a < pow10_int(digits - 1)) --digits;
    unsigned long decade = digits - 1;
    GapBucket& bucket = buckets[decade];
    if (bucket.hits == 0) {
      bucket.a_lo = pow10_int(decade);
      bucket.a_hi = pow10_int(decade + 1) - 1;
      bucket.min_ratio = row.ratio;
    } else if (row.ratio < bucket.min_ratio) {
      bucket.min_ratio = row.ratio;
    }
    ++bucket.hits;
    rep.rows.push_back(std::move(row));
  }
  for (auto& [decade, bucket] : buckets) rep.buckets.push_back(std::move(bucket));
  return rep;
}

// Every quartic hit yields an abc triple: with s = y^4 - t x^4 != 0 and
// d = gcd(t x^4, s), either (t x^4 + s = y^4) or (y^4 + |s| = t x^4) divided
// by d is coprime and summing.
struct AbcTriple {
  DivisibilityHit hit;
  Int x, y, d_common, s;
  Int a, b, c;  // a + b = c, gcd(a, b) = 1
  Int rad;      // radical(a b c)
  double quality = 0.0;
};

inline std::vector<AbcTriple> thm4_report(const std::vector<DivisibilityHit>& hits) {
  std::vector<AbcTriple> out;
  out.reserve(hits.size());
  for (const DivisibilityHit& hit : hits) {
    if (hit.family != Family::Quartic)
      throw std::invalid_argument("thm4_report: all hits must be quartic");
    QuarticReduction red = reduce_quartic(hit);
    Int tx4 = red.t * pow_int(red.x, 4);
    Int y4 = pow_int(red.y, 4);

    AbcTriple row;
    row.hit = hit;
    row.x = red.x;
    row.y = red.y;
    row.s = red.s;
    row.d_common = gcd(tx4, red.s);
    if (red.s > 0) {
      row.a = tx4 / row.d_common;
      row.b = red.s / row.d_common;
      row.c = y4 / row.d_common;
    } else {
      row.a = y4 / row.d_common;
      row.b = -red.s / row.d_common;
      row.c = tx4 / row.d_common;
    }
    detail::verify(row.a + row.b == row.c, "thm4_report: triple does not sum");
    detail::verify(gcd(row.a, row.b) == 1, "thm4_report: triple is not coprime");
    // a, b, c are pairwise coprime, so the radical splits.
    row.rad = radical(row.a) * radical(row.b) * radical(row.c);
    row.quality = log_int(row.c) / log_int(row.rad);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace gaplab
