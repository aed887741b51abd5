#pragma once
// logreal.hpp - sign plus natural-log magnitude, for scalars whose magnitude
// can reach around 10^(10^300) and would overflow any hardware float.

#include <cmath>

#include "gaplab/bigint.hpp"

namespace gaplab {

// Additions whose operands' log magnitudes differ by more than this absorb
// the smaller operand outright.
inline constexpr double kLogAbsorbThreshold = 40.0;

struct LogReal {
  int sign = 0;                // -1, 0, +1
  double log_magnitude = 0.0;  // ln|x|; ignored when sign == 0

  static LogReal zero() { return {}; }

  static LogReal from_log(int sign, double log_magnitude) {
    if (sign == 0) return {};
    return {sign < 0 ? -1 : 1, log_magnitude};
  }

  static LogReal from_value(double v) {
    if (v == 0.0) return {};
    return {v < 0.0 ? -1 : 1, std::log(std::fabs(v))};
  }

  static LogReal from_integer(const Int& n) {
    if (n == 0) return {};
    return {sgn(n) < 0 ? -1 : 1, log_int(n)};
  }

  bool is_zero() const { return sign == 0; }

  LogReal operator-() const { return {-sign, log_magnitude}; }

  LogReal abs() const { return {sign == 0 ? 0 : 1, log_magnitude}; }

  // May underflow to 0 or overflow to +-inf; intended for display only.
  double to_double() const {
    return sign == 0 ? 0.0 : static_cast<double>(sign) * std::exp(log_magnitude);
  }

  double log10_magnitude() const { return log_magnitude / 2.3025850929940457; }

  friend LogReal operator*(const LogReal& a, const LogReal& b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
  }

  friend LogReal operator+(const LogReal& a, const LogReal& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const LogReal& big = a.log_magnitude >= b.log_magnitude ? a : b;
    const LogReal& small = a.log_magnitude >= b.log_magnitude ? b : a;
    double delta = big.log_magnitude - small.log_magnitude;
    if (delta > kLogAbsorbThreshold) return big;
    if (a.sign == b.sign) {
      return {a.sign, big.log_magnitude + std::log1p(std::exp(-delta))};
    }
    if (delta == 0.0) return {};
    return {big.sign, big.log_magnitude + std::log1p(-std::exp(-delta))};
  }

  friend LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

  // Three-way comparison of the represented real numbers.
  friend int compare(const LogReal& a, const LogReal& b) {
    if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
    if (a.sign == 0 || a.log_magnitude == b.log_magnitude) return 0;
    bool mag_less = a.log_magnitude < b.log_magnitude;
    return mag_less == (a.sign > 0) ? -1 : 1;
  }

  friend bool operator<(const LogReal& a, const LogReal& b) { return compare(a, b) < 0; }
  friend bool operator>(const LogReal& a, const LogReal& b) { return compare(a, b) > 0; }
  friend bool operator<=(const LogReal& a, const LogReal& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const LogReal& a, const LogReal& b) { return compare(a, b) >= 0; }
  friend bool operator==(const LogReal& a, const LogReal& b) { return compare(a, b) == 0; }
};

}  // namespace gaplab
