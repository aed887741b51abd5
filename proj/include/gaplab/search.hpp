#pragma once
// search.hpp - exhaustive scans for divisibility hits over (a, b) windows,
// the Pell family of t = 2 cubic hits, and fixed-t enumeration by inverting
// the product polynomial.

#include <cstdint>
#include <limits>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "gaplab/bigarith.hpp"
#include "gaplab/reduction.hpp"

namespace gaplab {

struct SearchConfig {
  Family family = Family::CubicTriple;
  long l = 1;
  long a_min = 1;
  long a_max = 1;
  long b_max = 2;
  // Every b is a hit at a = 1, l = 1 in the triple family (6 divides any
  // product of three consecutive integers), so that row is skipped unless
  // explicitly requested.
  bool include_a_equals_one = false;
  unsigned worker_count = 0;  // 0 picks hardware concurrency

  void validate() const {
    if (a_min < 1) throw std::invalid_argument("search: a_min must be >= 1");
    if (a_max < a_min) throw std::invalid_argument("search: a_max must be >= a_min");
    if (b_max <= a_min) throw std::invalid_argument("search: b_max must exceed a_min");
    if (family == Family::CubicTriple) {
      if (l < 1) throw std::invalid_argument("search: l must be >= 1 for the triple family");
      if (static_cast<unsigned long long>(b_max) + 2ull * static_cast<unsigned long long>(l) >=
          (1ull << 42))
        throw budget_error("search: triple range exceeds the fast path (need b_max + 2l < 2^42)");
    } else {
      if (l == 0) throw std::invalid_argument("search: l must be non-zero for the quartic family");
      if (b_max >= (1l << 31))
        throw budget_error("search: quartic range exceeds the fast path (need b_max < 2^31)");
      if (l >= (1l << 62) || l <= -(1l << 62))
        throw budget_error("search: quartic offset exceeds the fast path (need |l| < 2^62)");
    }
  }
};

namespace detail {

using u128 = unsigned __int128;

inline Int u128_to_int(u128 v) {
  Int hi(static_cast<unsigned long>(v >> 64));
  return (hi << 64) + static_cast<unsigned long>(v);
}

// Largest uint64 divisor of the product of the legs that we can assemble from
// per-leg factor blocks; a cheap single-word residue filter applied to
// candidate products before the full 128-bit divisibility test.
inline uint64_t filter_modulus(const std::vector<uint64_t>& legs) {
  std::map<uint64_t, unsigned> blocks;
  for (uint64_t leg : legs) {
    uint64_t n = leg;
    for (uint32_t p : small_primes()) {
      if (uint64_t(p) * p > n) break;
      while (n % p == 0) {
        n /= p;
        ++blocks[p];
      }
    }
    if (n > 1) ++blocks[n];  // prime, or a block of primes beyond the sieve
  }
  uint64_t q = 1;
  for (const auto& [p, e] : blocks) {
    for (unsigned i = 0; i < e; ++i) {
      if (q > std::numeric_limits<uint64_t>::max() / p) return q;
      q *= p;
    }
  }
  return q;
}

inline void search_triple_chunk(long l, long a_lo, long a_hi, long b_max, bool include_a1,
                                std::vector<DivisibilityHit>& out) {
  for (long a = a_lo; a <= a_hi; ++a) {
    if (a == 1 && l == 1 && !include_a1) continue;
    u128 pa = u128(a) * u128(a + l) * u128(a + 2 * l);
    u128 q = pa <= std::numeric_limits<uint64_t>::max()
                 ? pa
                 : filter_modulus({uint64_t(a), uint64_t(a + l), uint64_t(a + 2 * l)});
    for (long b = a + 1; b <= b_max; ++b) {
      u128 pb = u128(b) * u128(b + l) * u128(b + 2 * l);
      if (pb % q != 0) continue;
      if (q != pa && pb % pa != 0) continue;
      out.push_back({Family::CubicTriple, Int(a), Int(b), l, u128_to_int(pb / pa)});
    }
  }
}

inline void search_quartic_chunk(long l, long a_lo, long a_hi, long b_max,
                                 std::vector<DivisibilityHit>& out) {
  for (long a = a_lo; a <= a_hi; ++a) {
    long long a2l = static_cast<long long>(a) * a + l;
    if (a2l == 0) continue;
    int sa = a2l > 0 ? 1 : -1;
    u128 pa = u128(static_cast<unsigned long long>(a) * a) *
              u128(static_cast<unsigned long long>(sa > 0 ? a2l : -a2l));
    u128 q = pa <= std::numeric_limits<uint64_t>::max()
                 ? pa
                 : filter_modulus({uint64_t(a), uint64_t(a),
                                   uint64_t(sa > 0 ? a2l : -a2l)});
    for (long b = a + 1; b <= b_max; ++b) {
      long long b2l = static_cast<long long>(b) * b + l;
      if (b2l == 0) continue;
      if ((b2l > 0 ? 1 : -1) != sa) continue;  // quotient must be positive
      u128 pb = u128(static_cast<unsigned long long>(b) * b) *
                u128(static_cast<unsigned long long>(b2l > 0 ? b2l : -b2l));
      if (pb % q != 0) continue;
      if (q != pa && pb % pa != 0) continue;
      u128 t = pb / pa;
      if (t < 2) continue;  // the quartic product is not monotone for l < 0
      out.push_back({Family::Quartic, Int(a), Int(b), l, u128_to_int(t)});
    }
  }
}

}  // namespace detail

// Scans a <= b windows for product divisibility, splitting the a range into
// contiguous chunks per worker; the merged output is identical for any
// worker count (hits sorted by (a, b)).
inline std::vector<DivisibilityHit> search_divisible(const SearchConfig& cfg) {
  cfg.validate();
  long span = cfg.a_max - cfg.a_min + 1;
  unsigned workers =
      cfg.worker_count != 0 ? cfg.worker_count : std::max(1u, std::thread::hardware_concurrency());
  if (workers > static_cast<unsigned long>(span)) workers = static_cast<unsigned>(span);

  std::vector<std::vector<DivisibilityHit>> parts(workers);
  auto run = [&cfg, &parts](unsigned i, long lo, long hi) {
    if (cfg.family == Family::CubicTriple)
      detail::search_triple_chunk(cfg.l, lo, hi, cfg.b_max, cfg.include_a_equals_one, parts[i]);
    else
      detail::search_quartic_chunk(cfg.l, lo, hi, cfg.b_max, parts[i]);
  };
  if (workers == 1) {
    run(0, cfg.a_min, cfg.a_max);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    long base = span / workers;
    long rem = span % workers;
    long lo = cfg.a_min;
    for (unsigned i = 0; i < workers; ++i) {
      long len = base + (long(i) < rem ? 1 : 0);
      pool.emplace_back(run, i, lo, lo + len - 1);
      lo += len;
    }
    for (std::thread& th : pool) th.join();
  }

  std::vector<DivisibilityHit> out;
  for (std::vector<DivisibilityHit>& part : parts)
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  return out;
}

// The infinite pair-product family: solutions of b(b+1) = 2 a(a+1) correspond
// to x^2 - 2 y^2 = -1 via x = 2b + 1, y = 2a + 1, generated by
// (x, y) -> (3x + 4y, 2x + 3y) from (1, 1). The fundamental node is the
// degenerate (a, b) = (0, 0) and is skipped.
inline std::vector<std::pair<Int, Int>> pell_pairs(unsigned count) {
  if (count < 1) throw std::invalid_argument("pell_pairs: count must be >= 1");
  std::vector<std::pair<Int, Int>> out;
  out.reserve(count);
  Int x = 1, y = 1;
  while (out.size() < count) {
    Int nx = 3 * x + 4 * y;
    Int ny = 2 * x + 3 * y;
    x = nx;
    y = ny;
    detail::verify(x * x - 2 * y * y == -1, "pell_pairs: recurrence left the Pell curve");
    detail::verify(mpz_odd_p(x.get_mpz_t()) != 0 && mpz_odd_p(y.get_mpz_t()) != 0,
                   "pell_pairs: Pell node with even coordinate");
    Int a = (y - 1) / 2;
    Int b = (x - 1) / 2;
    detail::verify(b * (b + 1) == 2 * a * (a + 1),
                   "pell_pairs: node fails the product identity");
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

// All hits of the triple family with this exact quotient t and a <= limit:
// solves z^3 - l^2 z = t a(a+l)(a+2l) for z = b + l by taking the integer
// cube root and checking the few candidates above it.
inline std::vector<std::pair<Int, Int>> enumerate_fixed_t(const Int& t, long l, const Int& limit) {
  if (t < 2) throw std::invalid_argument("enumerate_fixed_t: t must be >= 2");
  if (l < 1) throw std::invalid_argument("enumerate_fixed_t: l must be >= 1");
  if (limit < 1) throw std::invalid_argument("enumerate_fixed_t: limit must be >= 1");
  std::vector<std::pair<Int, Int>> out;
  Int l2 = Int(l) * l;
  Int zmax = limit + l;
  Int nmax = zmax * zmax * zmax - zmax * l2;
  for (Int a = 1;; ++a) {
    Int n = t * triple_product(a, l);
    if (n > nmax) break;
    Int z = integer_nth_root(n, 3);
    if (z < l + 1) z = l + 1;
    while (z * z * z - z * l2 < n) ++z;
    if (z * z * z - z * l2 == n) {
      Int b = z - l;
      if (b > a && b <= limit) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace gaplab
