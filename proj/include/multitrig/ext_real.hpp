#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "multitrig/double_double.hpp"

namespace multitrig {

// A double-double value together with an upper bound on its absolute error.
//
// Arithmetic is conservative: if the operands' true values lie within their
// err of the stored values, the true result lies within the result's err.
// Bounds are carried in double and rounded upward.
struct ExtReal {
  DoubleDouble value;
  double err = 0.0;

  ExtReal() = default;
  ExtReal(DoubleDouble v, double e = 0.0) : value(v), err(e) {}  // NOLINT
  ExtReal(double v) : value(v), err(0.0) {}                      // NOLINT

  double to_double() const { return value.to_double(); }
  bool finite() const { return isfinite(value) && std::isfinite(err); }
};

namespace detail {
// Inflates a nonnegative bound to cover the rounding of the bound itself.
inline double up(double x) { return x * (1.0 + 0x1p-50) + std::numeric_limits<double>::denorm_min(); }
inline double rounding(const DoubleDouble& v) {
  return 2.0 * DoubleDouble::epsilon() * std::abs(v.hi());
}
}  // namespace detail

inline ExtReal operator-(const ExtReal& a) { return {-a.value, a.err}; }

inline ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  const DoubleDouble v = a.value + b.value;
  return {v, detail::up(a.err + b.err + detail::rounding(v))};
}

inline ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }

inline ExtReal operator*(const ExtReal& a, const ExtReal& b) {
  const DoubleDouble v = a.value * b.value;
  const double ax = std::abs(a.value.hi()) * (1 + 0x1p-50);
  const double bx = std::abs(b.value.hi()) * (1 + 0x1p-50);
  return {v, detail::up(ax * b.err + bx * a.err + a.err * b.err + detail::rounding(v))};
}

inline ExtReal operator/(const ExtReal& a, const ExtReal& b) {
  const DoubleDouble v = a.value / b.value;
  const double denom = std::abs(b.value.hi()) * (1 - 0x1p-50) - b.err;
  if (!(denom > 0.0)) return {v, std::numeric_limits<double>::infinity()};
  const double num = a.err + std::abs(v.hi()) * (1 + 0x1p-50) * b.err;
  return {v, detail::up(num / denom + detail::rounding(v))};
}

inline ExtReal& operator+=(ExtReal& a, const ExtReal& b) { return a = a + b; }
inline ExtReal& operator-=(ExtReal& a, const ExtReal& b) { return a = a - b; }
inline ExtReal& operator*=(ExtReal& a, const ExtReal& b) { return a = a * b; }

inline ExtReal abs(const ExtReal& a) { return {abs(a.value), a.err}; }

// Elementary functions with first-order error propagation; the kernels
// themselves are charged 8 units of DoubleDouble::epsilon().
ExtReal log(const ExtReal& a);
ExtReal exp(const ExtReal& a);
ExtReal pow(const ExtReal& a, int n);

// Constants as exact-to-working-precision ExtReal values.
ExtReal pi_ext();
ExtReal ln2_ext();

// True when |a - b| <= a.err + b.err + slack.
bool consistent(const ExtReal& a, const ExtReal& b, double slack = 0.0);

}  // namespace multitrig
