#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo of two IEEE doubles with
// |lo| <= ulp(hi)/2, giving about 106 significand bits (~31-32 decimal digits).
//
// Basic operations follow the classic error-free transformations (Knuth
// two-sum, Dekker/FMA two-product). Elementary functions use argument
// reduction plus Taylor series and are accurate to a few units of
// DoubleDouble::epsilon().

#include <cmath>
#include <cstdint>
#include <string>

namespace multitrig {

namespace eft {

// s + e == a + b exactly
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

// requires |a| >= |b|
inline void quick_two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  e = b - (s - a);
}

// p + e == a * b exactly
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace eft

class DoubleDouble {
 public:
  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double x) : hi_(x), lo_(0.0) {}  // NOLINT: implicit by design of a numeric type
  constexpr DoubleDouble(double hi, double lo) : hi_(hi), lo_(lo) {}
  explicit DoubleDouble(int x) : hi_(static_cast<double>(x)), lo_(0.0) {}
  explicit DoubleDouble(std::int64_t x);

  constexpr double hi() const { return hi_; }
  constexpr double lo() const { return lo_; }
  explicit constexpr operator double() const { return hi_ + lo_; }
  constexpr double to_double() const { return hi_ + lo_; }

  // 2^-104: relative rounding unit of normalized double-double arithmetic.
  static constexpr double epsilon() { return 4.93038065763132e-32; }

  static DoubleDouble renormalize(double hi, double lo) {
    double s, e;
    eft::quick_two_sum(hi, lo, s, e);
    return {s, e};
  }

  DoubleDouble& operator+=(const DoubleDouble& b);
  DoubleDouble& operator-=(const DoubleDouble& b);
  DoubleDouble& operator*=(const DoubleDouble& b);
  DoubleDouble& operator/=(const DoubleDouble& b);

  DoubleDouble operator-() const { return {-hi_, -lo_}; }

  friend DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b);
  friend DoubleDouble operator+(const DoubleDouble& a, double b);
  friend DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b);
  friend DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b);
  friend DoubleDouble operator*(const DoubleDouble& a, double b);
  friend DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b);
  friend DoubleDouble operator/(const DoubleDouble& a, double b);

  friend bool operator==(const DoubleDouble& a, const DoubleDouble& b) {
    return a.hi_ == b.hi_ && a.lo_ == b.lo_;
  }
  friend bool operator<(const DoubleDouble& a, const DoubleDouble& b) {
    return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
  }
  friend bool operator>(const DoubleDouble& a, const DoubleDouble& b) { return b < a; }
  friend bool operator<=(const DoubleDouble& a, const DoubleDouble& b) { return !(b < a); }
  friend bool operator>=(const DoubleDouble& a, const DoubleDouble& b) { return !(a < b); }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

using DD = DoubleDouble;

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
  double s1, s2, t1, t2;
  eft::two_sum(a.hi_, b.hi_, s1, s2);
  eft::two_sum(a.lo_, b.lo_, t1, t2);
  s2 += t1;
  eft::quick_two_sum(s1, s2, s1, s2);
  s2 += t2;
  eft::quick_two_sum(s1, s2, s1, s2);
  return {s1, s2};
}

inline DoubleDouble operator+(const DoubleDouble& a, double b) {
  double s1, s2;
  eft::two_sum(a.hi_, b, s1, s2);
  s2 += a.lo_;
  eft::quick_two_sum(s1, s2, s1, s2);
  return {s1, s2};
}

inline DoubleDouble operator+(double a, const DoubleDouble& b) { return b + a; }

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }
inline DoubleDouble operator-(const DoubleDouble& a, double b) { return a + (-b); }
inline DoubleDouble operator-(double a, const DoubleDouble& b) { return (-b) + a; }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
  double p1, p2;
  eft::two_prod(a.hi_, b.hi_, p1, p2);
  p2 += a.hi_ * b.lo_ + a.lo_ * b.hi_;
  eft::quick_two_sum(p1, p2, p1, p2);
  return {p1, p2};
}

inline DoubleDouble operator*(const DoubleDouble& a, double b) {
  double p1, p2;
  eft::two_prod(a.hi_, b, p1, p2);
  p2 += a.lo_ * b;
  eft::quick_two_sum(p1, p2, p1, p2);
  return {p1, p2};
}

inline DoubleDouble operator*(double a, const DoubleDouble& b) { return b * a; }

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
  // long division with a correction step
  const double q1 = a.hi_ / b.hi_;
  DoubleDouble r = a - b * q1;
  const double q2 = r.hi_ / b.hi_;
  r -= b * q2;
  const double q3 = r.hi_ / b.hi_;
  double s, e;
  eft::quick_two_sum(q1, q2, s, e);
  return DoubleDouble(s, e) + q3;
}

inline DoubleDouble operator/(const DoubleDouble& a, double b) { return a / DoubleDouble(b); }
inline DoubleDouble operator/(double a, const DoubleDouble& b) { return DoubleDouble(a) / b; }

inline DoubleDouble& DoubleDouble::operator+=(const DoubleDouble& b) { return *this = *this + b; }
inline DoubleDouble& DoubleDouble::operator-=(const DoubleDouble& b) { return *this = *this - b; }
inline DoubleDouble& DoubleDouble::operator*=(const DoubleDouble& b) { return *this = *this * b; }
inline DoubleDouble& DoubleDouble::operator/=(const DoubleDouble& b) { return *this = *this / b; }

inline DoubleDouble::DoubleDouble(std::int64_t x) {
  const double h = static_cast<double>(x);
  const double l = static_cast<double>(x - static_cast<std::int64_t>(h));
  *this = renormalize(h, l);
}

inline DoubleDouble abs(const DoubleDouble& a) { return a.hi() < 0.0 ? -a : a; }
inline bool isfinite(const DoubleDouble& a) { return std::isfinite(a.hi()) && std::isfinite(a.lo()); }
inline DoubleDouble ldexp(const DoubleDouble& a, int e) {
  return {std::ldexp(a.hi(), e), std::ldexp(a.lo(), e)};
}
inline DoubleDouble sqr(const DoubleDouble& a) { return a * a; }

// nearest integer, ties away from zero
DoubleDouble nint(const DoubleDouble& a);
DoubleDouble floor(const DoubleDouble& a);

DoubleDouble sqrt(const DoubleDouble& a);
DoubleDouble pow(const DoubleDouble& a, int n);
DoubleDouble exp(const DoubleDouble& a);
DoubleDouble log(const DoubleDouble& a);
DoubleDouble sin(const DoubleDouble& a);
DoubleDouble cos(const DoubleDouble& a);
DoubleDouble tan(const DoubleDouble& a);

// sin(pi a), cos(pi a), tan(pi a): the reduction mod 2 is exact, so these stay
// accurate next to the zeros of sin/cos where the radian versions cannot.
DoubleDouble sinpi(const DoubleDouble& a);
DoubleDouble cospi(const DoubleDouble& a);
DoubleDouble tanpi(const DoubleDouble& a);
DoubleDouble cotpi(const DoubleDouble& a);

// z*cot(z); uses the Laurent series below |z| < 2^-20 so the removable 0/0 at
// z = 0 is never formed.
DoubleDouble z_cot_z(const DoubleDouble& z);

namespace dd_const {
const DoubleDouble& pi();
const DoubleDouble& half_pi();
const DoubleDouble& two_pi();
const DoubleDouble& ln2();
}  // namespace dd_const

// Decimal conversion. to_string gives `digits` significant digits;
// scientific=false uses positional notation where the exponent is moderate.
std::string to_string(const DoubleDouble& a, int digits, bool scientific = false);
// Parses a decimal literal ("3.14", "-1.5e-7") to the nearest double-double.
DoubleDouble parse_dd(const std::string& text);

}  // namespace multitrig
