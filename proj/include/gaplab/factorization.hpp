#pragma once
// factorization.hpp - trial division to 10^6 followed by Pollard rho with
// Brent's cycle detection, under an explicit iteration budget.
//
// Brent's improvement and the batched-gcd trick follow R. P. Brent,
// "An improved Monte Carlo factorization algorithm", BIT 20 (1980).

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gaplab/bigint.hpp"
#include "gaplab/errors.hpp"

namespace gaplab {

using Factorization = std::vector<std::pair<Int, unsigned>>;

inline constexpr uint32_t kTrialDivisionLimit = 1'000'000;
inline constexpr uint64_t kRhoIterationBudget = 50'000'000;

namespace detail {

inline const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j <= kTrialDivisionLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

inline bool probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Nontrivial factor of an odd composite n with no prime factor below the
// trial-division limit. Decrements `budget` once per iteration of the
// pseudo-random map; throws budget_error when it runs out.
inline Int pollard_rho_brent(const Int& n, uint64_t& budget) {
  constexpr uint64_t kBatch = 128;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, ys = 2, q = 1, factor = 1, diff;
    uint64_t r = 1;
    while (factor == 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) {
        y = (y * y + c) % n;
      }
      if (budget < r) throw budget_error("factorization: rho iteration budget exceeded");
      budget -= r;
      for (uint64_t k = 0; k < r && factor == 1; k += kBatch) {
        ys = y;
        uint64_t steps = std::min(kBatch, r - k);
        for (uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          diff = x - y;
          q = q * abs(diff) % n;
        }
        factor = gcd(q, n);
        if (budget < steps) throw budget_error("factorization: rho iteration budget exceeded");
        budget -= steps;
      }
      r *= 2;
    }
    if (factor == n) {
      // The batched gcd collapsed; replay from ys one step at a time.
      do {
        ys = (ys * ys + c) % n;
        diff = x - ys;
        factor = gcd(abs(diff), n);
        if (budget == 0) throw budget_error("factorization: rho iteration budget exceeded");
        --budget;
      } while (factor == 1);
    }
    if (factor != n) return factor;
  }
}

}  // namespace detail

// Prime factorization of n >= 1, primes ascending. Inputs within the search
// ranges handled here stay below ~10^18, well inside the default rho budget.
inline Factorization factorize(const Int& n_in, uint64_t rho_budget = kRhoIterationBudget) {
  if (n_in < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  Factorization out;
  Int n = n_in;
  for (uint32_t p : detail::small_primes()) {
    if (mpz_cmp_ui(n.get_mpz_t(), uint64_t(p) * p) < 0) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    std::map<Int, unsigned> large;
    std::vector<Int> stack{n};
    uint64_t budget = rho_budget;
    while (!stack.empty()) {
      Int m = stack.back();
      stack.pop_back();
      if (detail::probable_prime(m)) {
        ++large[m];
        continue;
      }
      Int f = detail::pollard_rho_brent(m, budget);
      stack.push_back(m / f);
      stack.push_back(std::move(f));
    }
    for (auto& [p, e] : large) out.emplace_back(p, e);
  }
  return out;
}

inline Int radical(const Int& n) {
  Int r = 1;
  for (const auto& [p, e] : factorize(n)) r *= p;
  return r;
}

inline bool is_squarefree(const Int& n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

}  // namespace gaplab
