#include "multitrig/double_double.hpp"

#include <mpfr.h>

#include <array>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace multitrig {

namespace {

constexpr const char* kPiLiteral = "3.141592653589793238462643383279502884197";
constexpr const char* kLn2Literal = "0.6931471805599453094172321214581765680755";

// Three-double split of a decimal literal (hi + mid + lo, ~159 bits).
std::array<double, 3> split3(const char* text) {
  mpfr_t x;
  mpfr_init2(x, 320);
  mpfr_set_str(x, text, 10, MPFR_RNDN);
  std::array<double, 3> parts{};
  for (double& p : parts) {
    p = mpfr_get_d(x, MPFR_RNDN);
    mpfr_sub_d(x, x, p, MPFR_RNDN);
  }
  mpfr_clear(x);
  return parts;
}

struct Constants {
  DoubleDouble pi, half_pi, two_pi, ln2;
  double half_pi_tail;  // third component of pi/2 for radian reduction
  std::array<DoubleDouble, 40> inv_fact;
};

DoubleDouble atan_inv(int m) {
  // atan(1/m) by its Maclaurin series
  const DoubleDouble inv_m = DoubleDouble(1.0) / static_cast<double>(m);
  const DoubleDouble inv_m2 = inv_m * inv_m;
  DoubleDouble power = inv_m;
  DoubleDouble sum = 0.0;
  for (int k = 0; k < 200; ++k) {
    const DoubleDouble term = power / static_cast<double>(2 * k + 1);
    sum = (k % 2 == 0) ? sum + term : sum - term;
    if (std::abs(term.hi()) < 1e-36) break;
    power *= inv_m2;
  }
  return sum;
}

Constants make_constants() {
  Constants c{};
  const auto p = split3(kPiLiteral);
  c.pi = DoubleDouble::renormalize(p[0], p[1]);
  c.half_pi = ldexp(c.pi, -1);
  c.two_pi = ldexp(c.pi, 1);
  c.half_pi_tail = std::ldexp(p[2], -1);
  const auto l = split3(kLn2Literal);
  c.ln2 = DoubleDouble::renormalize(l[0], l[1]);

  // Runtime recomputation; the stored literals must agree to working precision.
  const DoubleDouble machin = atan_inv(5) * 16.0 - atan_inv(239) * 4.0;
  DoubleDouble ln2 = 0.0;
  {
    // ln 2 = 2 atanh(1/3)
    const DoubleDouble third = DoubleDouble(1.0) / 3.0;
    const DoubleDouble ninth = third * third;
    DoubleDouble power = third;
    for (int k = 0; k < 80; ++k) {
      ln2 += power / static_cast<double>(2 * k + 1);
      power *= ninth;
    }
    ln2 *= 2.0;
  }
  const double tol = 8.0 * DoubleDouble::epsilon();
  if (std::abs((machin - c.pi).to_double()) > tol * 4.0 ||
      std::abs((ln2 - c.ln2).to_double()) > tol) {
    throw std::logic_error("stored pi / log 2 literals disagree with runtime computation");
  }

  DoubleDouble f = 1.0;
  c.inv_fact[0] = 1.0;
  for (std::size_t k = 1; k < c.inv_fact.size(); ++k) {
    f = f / static_cast<double>(k);
    c.inv_fact[k] = f;
  }
  return c;
}

const Constants& constants() {
  static const Constants c = make_constants();
  return c;
}

// sin(r) and cos(r) for |r| <= pi/4
DoubleDouble sin_taylor(const DoubleDouble& r) {
  if (r.hi() == 0.0) return r;
  const auto& f = constants().inv_fact;
  const DoubleDouble x = r * r;
  // sum_{i<=14} (-1)^i x^i / (2i+1)!
  DoubleDouble p = f[29];
  for (int i = 13; i >= 0; --i) {
    const DoubleDouble c = (i % 2 == 0) ? f[2 * i + 1] : -f[2 * i + 1];
    p = p * x + c;
  }
  return p * r;
}

DoubleDouble cos_taylor(const DoubleDouble& r) {
  const auto& f = constants().inv_fact;
  const DoubleDouble x = r * r;
  DoubleDouble p = f[30];
  for (int i = 14; i >= 0; --i) {
    const DoubleDouble c = (i % 2 == 0) ? f[2 * i] : -f[2 * i];
    p = p * x + c;
  }
  return p;
}

// Reduces a = n*(pi/2) + r with |r| <= pi/4 and returns n mod 4.
int reduce_half_pi(const DoubleDouble& a, DoubleDouble& r) {
  const auto& c = constants();
  const double k = std::floor((a / c.half_pi).hi() + 0.5);
  r = a - c.half_pi * k;
  r = r - c.half_pi_tail * k;
  long long n = static_cast<long long>(k) % 4;
  if (n < 0) n += 4;
  return static_cast<int>(n);
}

// Reduces a = n/2 + r with |r| <= 1/4 (exact) and returns n mod 4.
int reduce_half_unit(const DoubleDouble& a, DoubleDouble& r) {
  const DoubleDouble n = nint(a * 2.0);
  r = a - ldexp(n, -1);
  // n fits comfortably: arguments here are O(1)
  long long q = static_cast<long long>(n.hi()) + static_cast<long long>(n.lo());
  q %= 4;
  if (q < 0) q += 4;
  return static_cast<int>(q);
}

void sincos_quadrant(int q, const DoubleDouble& z, DoubleDouble& s, DoubleDouble& c) {
  const DoubleDouble sz = sin_taylor(z);
  const DoubleDouble cz = cos_taylor(z);
  switch (q) {
    case 0: s = sz; c = cz; break;
    case 1: s = cz; c = -sz; break;
    case 2: s = -sz; c = -cz; break;
    default: s = -cz; c = sz; break;
  }
}

}  // namespace

namespace dd_const {
const DoubleDouble& pi() { return constants().pi; }
const DoubleDouble& half_pi() { return constants().half_pi; }
const DoubleDouble& two_pi() { return constants().two_pi; }
const DoubleDouble& ln2() { return constants().ln2; }
}  // namespace dd_const

DoubleDouble nint(const DoubleDouble& a) {
  double hi = std::floor(a.hi() + 0.5);
  if (hi == a.hi()) {
    const double lo = std::floor(a.lo() + 0.5);
    return DoubleDouble::renormalize(hi, lo);
  }
  if (std::abs(hi - a.hi()) == 0.5 && a.lo() < 0.0) hi -= 1.0;
  return {hi, 0.0};
}

DoubleDouble floor(const DoubleDouble& a) {
  const double hi = std::floor(a.hi());
  if (hi == a.hi()) return DoubleDouble::renormalize(hi, std::floor(a.lo()));
  return {hi, 0.0};
}

DoubleDouble sqrt(const DoubleDouble& a) {
  if (a.hi() == 0.0) return 0.0;
  if (a.hi() < 0.0) return std::numeric_limits<double>::quiet_NaN();
  const DoubleDouble y = std::sqrt(a.hi());
  return y + (a - y * y) / (y * 2.0);
}

DoubleDouble pow(const DoubleDouble& a, int n) {
  if (n == 0) return 1.0;
  unsigned m = static_cast<unsigned>(n < 0 ? -n : n);
  DoubleDouble base = a;
  DoubleDouble result = 1.0;
  while (m != 0) {
    if (m & 1U) result *= base;
    m >>= 1U;
    if (m != 0) base *= base;
  }
  return n < 0 ? DoubleDouble(1.0) / result : result;
}

DoubleDouble exp(const DoubleDouble& a) {
  if (a.hi() > 709.78) return std::numeric_limits<double>::infinity();
  if (a.hi() < -745.0) return 0.0;
  if (a.hi() == 0.0) return 1.0;
  const auto& c = constants();
  const double k = std::floor(a.hi() / c.ln2.hi() + 0.5);
  DoubleDouble r = a - c.ln2 * k;
  r = ldexp(r, -10);
  // expm1 of the reduced argument, then undo the 2^-10 scaling by squaring
  DoubleDouble p = c.inv_fact[10];
  for (int i = 9; i >= 1; --i) p = p * r + c.inv_fact[i];
  p = p * r;
  for (int i = 0; i < 10; ++i) p = ldexp(p, 1) + p * p;
  return ldexp(p + 1.0, static_cast<int>(k));
}

DoubleDouble log(const DoubleDouble& a) {
  if (a.hi() == 0.0) return -std::numeric_limits<double>::infinity();
  if (a.hi() < 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (!std::isfinite(a.hi())) return a;
  DoubleDouble x = std::log(a.hi());
  x = x + a * exp(-x) - 1.0;
  return x;
}

DoubleDouble sin(const DoubleDouble& a) {
  DoubleDouble r;
  const int q = reduce_half_pi(a, r);
  DoubleDouble s, c;
  sincos_quadrant(q, r, s, c);
  return s;
}

DoubleDouble cos(const DoubleDouble& a) {
  DoubleDouble r;
  const int q = reduce_half_pi(a, r);
  DoubleDouble s, c;
  sincos_quadrant(q, r, s, c);
  return c;
}

DoubleDouble tan(const DoubleDouble& a) {
  DoubleDouble r;
  const int q = reduce_half_pi(a, r);
  DoubleDouble s, c;
  sincos_quadrant(q, r, s, c);
  return s / c;
}

DoubleDouble sinpi(const DoubleDouble& a) {
  DoubleDouble r;
  const int q = reduce_half_unit(a, r);
  DoubleDouble s, c;
  sincos_quadrant(q, r * dd_const::pi(), s, c);
  return s;
}

DoubleDouble cospi(const DoubleDouble& a) {
  DoubleDouble r;
  const int q = reduce_half_unit(a, r);
  DoubleDouble s, c;
  sincos_quadrant(q, r * dd_const::pi(), s, c);
  return c;
}

DoubleDouble tanpi(const DoubleDouble& a) {
  DoubleDouble r;
  const int q = reduce_half_unit(a, r);
  DoubleDouble s, c;
  sincos_quadrant(q, r * dd_const::pi(), s, c);
  return s / c;
}

DoubleDouble cotpi(const DoubleDouble& a) {
  DoubleDouble r;
  const int q = reduce_half_unit(a, r);
  DoubleDouble s, c;
  sincos_quadrant(q, r * dd_const::pi(), s, c);
  return c / s;
}

DoubleDouble z_cot_z(const DoubleDouble& z) {
  if (std::abs(z.hi()) < 0x1p-20) {
    // 1 - z^2/3 - z^4/45 - 2 z^6/945; the z^8 term is below 2^-160
    const DoubleDouble x = z * z;
    DoubleDouble p = DoubleDouble(2.0) / 945.0;
    p = p * x + DoubleDouble(1.0) / 45.0;
    p = p * x + DoubleDouble(1.0) / 3.0;
    return DoubleDouble(1.0) - p * x;
  }
  DoubleDouble r;
  const int q = reduce_half_pi(z, r);
  DoubleDouble s, c;
  sincos_quadrant(q, r, s, c);
  return z * c / s;
}

std::string to_string(const DoubleDouble& a, int digits, bool scientific) {
  if (!isfinite(a)) {
    if (std::isnan(a.hi())) return "nan";
    return a.hi() > 0 ? "inf" : "-inf";
  }
  if (digits < 1) digits = 1;
  if (a.hi() == 0.0) {
    if (scientific) return "0." + std::string(static_cast<std::size_t>(digits - 1), '0') + "e+00";
    return "0";
  }
  mpfr_t x;
  mpfr_init2(x, 2200);
  mpfr_set_d(x, a.hi(), MPFR_RNDN);
  mpfr_add_d(x, x, a.lo(), MPFR_RNDN);
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), x, MPFR_RNDN);
  std::string d(raw);
  mpfr_free_str(raw);
  mpfr_clear(x);
  std::string sign;
  if (!d.empty() && d[0] == '-') {
    sign = "-";
    d.erase(0, 1);
  }
  const long exp10 = static_cast<long>(e10);  // value = 0.d1d2... * 10^exp10
  if (scientific || exp10 < -4 || exp10 > 21) {
    std::string out = sign + d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    const long e = exp10 - 1;
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    return out + buf;
  }
  if (exp10 <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-exp10), '0') + d;
  const auto ip = static_cast<std::size_t>(exp10);
  if (ip >= d.size()) return sign + d + std::string(ip - d.size(), '0');
  return sign + d.substr(0, ip) + "." + d.substr(ip);
}

DoubleDouble parse_dd(const std::string& text) {
  mpfr_t x;
  mpfr_init2(x, 2200);
  if (mpfr_set_str(x, text.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(x);
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
  const double hi = mpfr_get_d(x, MPFR_RNDN);
  mpfr_sub_d(x, x, hi, MPFR_RNDN);
  const double lo = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return DoubleDouble::renormalize(hi, lo);
}

}  // namespace multitrig
