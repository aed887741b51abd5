// test_effective.cpp - discriminant/regulator bounds, irrationality measure
// constants, Bennett's gap, cutoff chains, and the derived floors.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <gaplab/effective.hpp>

#include "oracles.hpp"

using namespace gaplab;
using Catch::Approx;

TEST_CASE("cubic field bounds") {
  SECTION("m = 2") {
    FieldBounds fb = cubic_field_bounds(Int(2));
    CHECK(fb.m_reduced == 2);
    CHECK(fb.disc_bound == 108);
    REQUIRE(fb.disc_candidates.size() == 2);
    CHECK(fb.disc_candidates[0] == -108);
    CHECK(fb.disc_candidates[1] == -12);
    CHECK(fb.reg_bound == Approx(2.0 * std::log(12.0)).epsilon(1e-14));
    CHECK(fb.reg_bound_derived <= fb.reg_bound);
    FieldBounds ex = cubic_field_bounds(Int(2), CubicDiscMode::ExactCandidates);
    REQUIRE(ex.disc_candidates.size() == 1);
    CHECK(ex.disc_candidates[0] == -108);  // 4 mod 9 != 1, wildly ramified case
  }
  SECTION("known discriminants through the mod 9 split") {
    // m' = 10 and 17 are the tamely ramified cases (m'^2 = 1 mod 9)
    CHECK(cubic_field_bounds(Int(10), CubicDiscMode::ExactCandidates).disc_candidates[0] == -300);
    CHECK(cubic_field_bounds(Int(17), CubicDiscMode::ExactCandidates).disc_candidates[0] == -867);
    CHECK(cubic_field_bounds(Int(6), CubicDiscMode::ExactCandidates).disc_candidates[0] == -972);
    // cube parts are invisible: 12 = 3 * 2^2 and 96 = 12 * 2^3 give one field
    FieldBounds a = cubic_field_bounds(Int(12), CubicDiscMode::ExactCandidates);
    FieldBounds b = cubic_field_bounds(Int(96), CubicDiscMode::ExactCandidates);
    CHECK(a.disc_candidates[0] == b.disc_candidates[0]);
    CHECK(a.disc_candidates[0] == -972);  // 12^2 = 0 mod 9
  }
  SECTION("rejects") {
    CHECK_THROWS_AS(cubic_field_bounds(Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(cubic_field_bounds(Int(8)), std::invalid_argument);
    CHECK_THROWS_AS(cubic_field_bounds(Int(27)), std::invalid_argument);
  }
  SECTION("derived bound stays below the simplified one across a sweep") {
    for (long m = 2; m <= 600; ++m) {
      if (is_perfect_nth_power(Int(m), 3)) continue;
      FieldBounds fb = cubic_field_bounds(Int(m));
      CHECK(fb.reg_bound_derived <= fb.reg_bound);
      for (const Int& d : fb.disc_candidates) {
        CHECK(d < 0);
        CHECK(abs(d) <= 27 * fb.m_reduced * fb.m_reduced);
      }
    }
  }
}

TEST_CASE("quartic field bounds") {
  SECTION("pinned discriminants") {
    CHECK(quartic_field_bounds(Int(2)).disc_candidates[0] == -2048);
    CHECK(quartic_field_bounds(Int(8)).disc_candidates[0] == -2048);  // same field as m = 2
    CHECK(quartic_field_bounds(Int(3)).disc_candidates[0] == -6912);
    CHECK(quartic_field_bounds(Int(27)).disc_candidates[0] == -6912);  // same field as m = 3
    CHECK(quartic_field_bounds(Int(48)).disc_candidates[0] == -6912);  // 48 = 3 * 2^4
    CHECK(quartic_field_bounds(Int(12)).disc_candidates[0] == -1728);
    CHECK(quartic_field_bounds(Int(5)).disc_candidates[0] == -2000);
    // representative switching with two odd cores, both orders
    CHECK(quartic_field_bounds(Int(135)).disc_candidates[0] ==
          -(pow2_int(8) * 125 * 27));  // 135 = 5 * 3^3, keep (A, C) = (5, 3)
    CHECK(quartic_field_bounds(Int(375)).disc_candidates[0] ==
          -(pow2_int(8) * 125 * 27));  // 375 = 3 * 5^3, switch to (5, 3)
    CHECK(quartic_field_bounds(Int(24)).disc_candidates[0] == -55296);  // 2^8 * 2^3 * 3^3
  }
  SECTION("m = 12 in detail") {
    FieldBounds fb = quartic_field_bounds(Int(12));
    CHECK(fb.m_reduced == 12);
    CHECK(fb.disc_bound == 256 * 12 * 12 * 12);
    CHECK(fb.reg_bound == Approx(59292.4545928332).epsilon(1e-12));
  }
  SECTION("rejects") {
    CHECK_THROWS_AS(quartic_field_bounds(Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(quartic_field_bounds(Int(4)), std::invalid_argument);
    CHECK_THROWS_AS(quartic_field_bounds(Int(36)), std::invalid_argument);
  }
  SECTION("side conditions hold across a sweep") {
    for (long m = 2; m <= 600; ++m) {
      if (is_perfect_nth_power(Int(m), 2)) continue;
      FieldBounds fb = quartic_field_bounds(Int(m));
      REQUIRE(fb.disc_candidates.size() == 1);
      Int d = fb.disc_candidates[0];
      CHECK(d < 0);
      CHECK(abs(d) <= fb.disc_bound);
      // |d| = 2^e A^3 B^2 C^3 with e in {2, 4, 8}; an even A adds three more
      // twos (only with e = 8), an even B adds two (only with e in {2, 4})
      unsigned long v2 = 0;
      Int odd = -d;
      while (mpz_even_p(odd.get_mpz_t())) {
        odd /= 2;
        ++v2;
      }
      CHECK((v2 == 2 || v2 == 4 || v2 == 6 || v2 == 8 || v2 == 11));
    }
  }
}

TEST_CASE("bugeaud measure") {
  SECTION("degree 3, m = 2") {
    EffectiveMeasure em = bugeaud_measure(3, Int(2));
    CHECK(em.regulator_bound == Approx(2.0 * std::log(12.0)).epsilon(1e-14));
    CHECK(em.height_bound == Approx(std::exp(1.0)));  // A = max(e, m) = e
    CHECK(em.chain_inequality_ok);
    REQUIRE(em.tau.sign == 1);
    REQUIRE(em.c_log.sign == -1);
    // tau = 1 / (10^78 3^42 R): check the log10 against a direct evaluation
    double expect_tau = -(78.0 + 42.0 * std::log10(3.0) + std::log10(em.regulator_bound));
    CHECK(em.tau.log10_magnitude() == Approx(expect_tau).epsilon(1e-13));
    // the height term is absorbed: |c_log| = 10^81 3^42 R up to 1 part in e^40
    double expect_c = 81.0 + 42.0 * std::log10(3.0) + std::log10(em.regulator_bound);
    CHECK(em.c_log.log10_magnitude() == Approx(expect_c).epsilon(1e-13));
  }
  SECTION("degree 4, m = 12") {
    EffectiveMeasure em = bugeaud_measure(4, Int(12));
    CHECK(em.regulator_bound == Approx(59292.4545928332).epsilon(1e-12));
    CHECK(em.tau.sign == 1);
    CHECK(em.tau.log10_magnitude() < -100.0);  // tau < 10^-100
    double expect_tau = -(104.0 + 56.0 * std::log10(4.0) + std::log10(em.regulator_bound));
    CHECK(em.tau.log10_magnitude() == Approx(expect_tau).epsilon(1e-13));
  }
  SECTION("tau and c_log strictly decrease as the field grows") {
    std::vector<long> ms = {2, 3, 5, 6, 7, 10, 11, 13};
    for (std::size_t i = 1; i < ms.size(); ++i) {
      EffectiveMeasure lo = bugeaud_measure(3, Int(ms[i - 1]));
      EffectiveMeasure hi = bugeaud_measure(3, Int(ms[i]));
      CHECK(hi.tau < lo.tau);
      CHECK(hi.c_log < lo.c_log);
    }
  }
  SECTION("rejects") {
    CHECK_THROWS_AS(bugeaud_measure(2, Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(bugeaud_measure(3, Int(8)), std::invalid_argument);
    CHECK_THROWS_AS(bugeaud_measure(4, Int(4)), std::invalid_argument);
  }
}

TEST_CASE("bennett gap") {
  SECTION("exact on perfect 20th powers of u^49") {
    CHECK(bennett_gap(Int(1)) == make_rat(1, 4));
    // u = 2^20: u^2.45 = 2^49 exactly
    CHECK(bennett_gap(pow2_int(20)) == make_rat(1, Int(4) * pow2_int(49)));
  }
  SECTION("frozen decimal values") {
    CHECK(bennett_gap(Int(5)).get_d() == Approx(0.00484689373283).epsilon(1e-9));
    CHECK(bennett_gap(Int(35)).get_d() == Approx(4.120721845e-5).epsilon(1e-9));
  }
  SECTION("certified lower bound within 2^-60 relative slack") {
    for (long u : {2l, 3l, 7l, 11l, 34l, 35l, 1000l}) {
      Rat bound = bennett_gap(Int(u));
      mpf_class root = oracle::nth_root_mpf(pow_int(Int(u), 49), 20, 320);  // u^2.45
      mpf_class exact(0, 320);
      exact = 1 / (4 * root);
      mpf_class bound_f(bound, 320);
      CHECK(bound_f <= exact);
      CHECK(exact - bound_f <= exact * 1e-6);
    }
  }
  SECTION("rejects") { CHECK_THROWS_AS(bennett_gap(Int(0)), std::invalid_argument); }
}

TEST_CASE("cutoff chains") {
  SECTION("cubic t = 2, l = 1 pinned") {
    CutoffChain c = cutoff_cubic(Int(2), 1);
    double l12 = std::log(12.0);
    CHECK(c.raw_denom_exponent == Approx(1e99 * 2.0 * l12).epsilon(1e-12));
    REQUIRE(c.intermediate_log_max.has_value());
    CHECK(c.log_max == Approx(1e202 * 4.0 * l12 * l12).epsilon(1e-12));
    CHECK(c.raw_log_max <= *c.intermediate_log_max);
    CHECK(*c.intermediate_log_max <= c.log_max);
  }
  SECTION("ordering and monotonicity over a grid") {
    double prev = 0.0;
    for (long t : {2l, 3l, 5l, 10l, 100l, 10000l}) {
      for (long l : {1l, 2l, 3l, 10l}) {
        CutoffChain c = cutoff_cubic(Int(t), l);
        CHECK(c.raw_log_max <= c.log_max);
      }
      CutoffChain c1 = cutoff_cubic(Int(t), 1);
      CHECK(c1.log_max > prev);
      prev = c1.log_max;
    }
    prev = 0.0;
    for (long t : {2l, 3l, 5l, 10l, 100l, 10000l}) {
      for (long l : {-7l, -1l, 1l, 2l, 3l}) {
        CutoffChain c = cutoff_quartic(Int(t), l);
        CHECK(c.raw_log_max <= c.log_max);
        CHECK_FALSE(c.intermediate_log_max.has_value());
      }
      CutoffChain c1 = cutoff_quartic(Int(t), 1);
      CHECK(c1.log_max > prev);
      prev = c1.log_max;
    }
  }
  SECTION("rejects") {
    CHECK_THROWS_AS(cutoff_cubic(Int(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(cutoff_cubic(Int(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(cutoff_quartic(Int(2), 0), std::invalid_argument);
  }
}

TEST_CASE("minimal t floors and gap lower bounds") {
  SECTION("pinned values at a = 10^6, l = 1") {
    Int a = pow10_int(6);
    CHECK(min_t_cubic(a, 1) == Approx(1.415543314136363e-103).epsilon(1e-12));
    CHECK(min_t_quartic(a, 1) == Approx(3.3727712105261985e-98).epsilon(1e-9));
  }
  SECTION("independent re-evaluation") {
    for (long exp = 3; exp <= 9; ++exp) {
      Int a = pow10_int(unsigned(exp));
      double la = std::log(10.0) * double(exp);
      double expect_c = std::sqrt(la) / (1e103 * std::log(la));
      CHECK(min_t_cubic(a, 1) == Approx(expect_c).epsilon(1e-10));
      double expect_q = std::cbrt(la) / (1e97 * std::cbrt(std::log(3.0)) * std::log(la) * std::log(la));
      CHECK(min_t_quartic(a, 1) == Approx(expect_q).epsilon(1e-10));
    }
  }
  SECTION("monotone directions on decade samples") {
    // The cubic floor rises with a from 10^3 on; the quartic floor falls
    // throughout any desk-scale range (it only turns around past e^403).
    for (long exp = 3; exp < 9; ++exp) {
      CHECK(min_t_cubic(pow10_int(unsigned(exp + 1)), 1) > min_t_cubic(pow10_int(unsigned(exp)), 1));
      CHECK(min_t_quartic(pow10_int(unsigned(exp + 1)), 1) <
            min_t_quartic(pow10_int(unsigned(exp)), 1));
    }
  }
  SECTION("gap floor composition") {
    Int a = pow10_int(6);
    CHECK(gap_lower_bound(a, 1, Family::CubicTriple) ==
          Approx(std::cbrt(min_t_cubic(a, 1)) * 1e6).epsilon(1e-12));
    CHECK(gap_lower_bound(a, 1, Family::Quartic) ==
          Approx(0.9 * std::pow(min_t_quartic(a, 1), 0.25) * 1e6).epsilon(1e-12));
  }
  SECTION("rejects below the a floor") {
    CHECK_THROWS_AS(min_t_cubic(Int(15), 1), std::invalid_argument);
    CHECK_THROWS_AS(min_t_quartic(Int(15), 1), std::invalid_argument);
    CHECK_NOTHROW(min_t_cubic(Int(16), 1));
  }
}

TEST_CASE("abc quality") {
  CHECK(abc_quality(Int(2), Int(3), Int(5)) == Approx(std::log(5.0) / std::log(30.0)).epsilon(1e-14));
  CHECK(abc_quality(Int(1), Int(1), Int(2)) == Approx(1.0).epsilon(1e-14));
  CHECK(abc_quality(Int(1), Int(8), Int(9)) ==
        Approx(std::log(9.0) / std::log(6.0)).epsilon(1e-14));  // the classic 1 + 8 = 9
  CHECK_THROWS_AS(abc_quality(Int(2), Int(3), Int(6)), std::invalid_argument);
  CHECK_THROWS_AS(abc_quality(Int(2), Int(4), Int(6)), std::invalid_argument);
  CHECK_THROWS_AS(abc_quality(Int(0), Int(2), Int(2)), std::invalid_argument);
}
