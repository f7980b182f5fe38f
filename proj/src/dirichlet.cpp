#include "multitrig/dirichlet.hpp"

#include <cmath>
#include <vector>

namespace multitrig {

namespace {

struct Tables {
  std::vector<Rational> bernoulli;
  std::vector<Rational> euler;
};

Tables build_tables() {
  constexpr int n = kClosedFormTableOrder;
  Tables t;
  t.bernoulli.resize(n + 1);
  t.euler.resize(n + 1);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  t.bernoulli[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(k))) * t.bernoulli[k];
    t.bernoulli[m] = -s / (m + 1);
  }
  // sum_{k=0}^{m} C(2m, 2k) E_{2k} = 0, odd Euler numbers vanish
  t.euler[0] = 1;
  for (int m = 1; 2 * m <= n; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(static_cast<unsigned>(2 * m), static_cast<unsigned>(2 * k))) * t.euler[2 * k];
    t.euler[2 * m] = -s;
  }
  return t;
}

const Tables& tables() {
  static const Tables t = build_tables();
  return t;
}

void check_order(int s, int lo, const char* name) {
  if (s < lo || s > kMaxDirichletOrder) {
    throw OrderOutOfRange(std::string(name) + ": order " + std::to_string(s) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(kMaxDirichletOrder) + "]");
  }
}

// relative error of 1/m^s computed by binary powering in double-double
double power_rel_err(int s) {
  const int steps = 2 * static_cast<int>(std::ceil(std::log2(static_cast<double>(s) + 1))) + 2;
  return 8.0 * steps * DoubleDouble::epsilon();
}

DoubleDouble inv_power(long m, int s) {
  const DoubleDouble p = pow(DoubleDouble(static_cast<double>(m)), s);
  if (!isfinite(p)) return 0.0;  // below 2^-1024, far under every error budget
  return DoubleDouble(1.0) / p;
}

ExtReal with_rel(const AlternatingSum& a, int s) {
  ExtReal v = a.value;
  v.err = detail::up(v.err + power_rel_err(s) * std::abs(v.value.hi()) * 2.0 +
                     std::numeric_limits<double>::min());
  return v;
}

ExtReal eta_series(int s) {
  return with_rel(alternating_sum([s](int k) { return inv_power(k + 1, s); }), s);
}

ExtReal beta_series(int s) {
  return with_rel(alternating_sum([s](int k) { return inv_power(2L * k + 1, s); }), s);
}

ExtReal zeta_even_closed(int s) {
  const Rational q = abs(bernoulli(s)) * (BigInt(1) << static_cast<unsigned>(s - 1)) /
                     Rational(factorial(static_cast<unsigned>(s)));
  return rational_to_ext(q) * pow(pi_ext(), s);
}

ExtReal beta_odd_closed(int s) {
  const int m = (s - 1) / 2;
  const Rational q = abs(euler_number(2 * m)) /
                     Rational((BigInt(1) << static_cast<unsigned>(2 * m + 2)) * factorial(static_cast<unsigned>(2 * m)));
  return rational_to_ext(q) * pow(pi_ext(), s);
}

// 1 - 2^-e, exact in double-double for e < 1074
ExtReal one_minus_pow2(int e) { return ExtReal(DoubleDouble(1.0) - DoubleDouble(std::ldexp(1.0, -e))); }

ExtReal zeta_value(int s) {
  if (s % 2 == 0 && s <= kClosedFormTableOrder) return zeta_even_closed(s);
  return eta_series(s) / one_minus_pow2(s - 1);
}

ExtReal beta_value(int s) {
  if (s % 2 == 1 && s <= kClosedFormTableOrder + 1) return beta_odd_closed(s);
  return beta_series(s);
}

}  // namespace

std::string kind_name(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::kZeta: return "zeta";
    case SpecialKind::kEta: return "eta";
    case SpecialKind::kLambda: return "lambda";
    case SpecialKind::kBeta: return "beta";
    case SpecialKind::kCatalan: return "catalan";
    case SpecialKind::kLogMultiCos: return "logMultiCos";
    case SpecialKind::kLogMultiSin: return "logMultiSin";
  }
  return "unknown";
}

const Rational& bernoulli(int n) {
  if (n < 0 || n > kClosedFormTableOrder) throw OrderOutOfRange("bernoulli: index out of table");
  return tables().bernoulli[static_cast<std::size_t>(n)];
}

const Rational& euler_number(int n) {
  if (n < 0 || n > kClosedFormTableOrder) throw OrderOutOfRange("euler_number: index out of table");
  return tables().euler[static_cast<std::size_t>(n)];
}

AlternatingSum alternating_sum(const std::function<DoubleDouble(int)>& a, double target) {
  const DoubleDouble a0 = a(0);
  const double scale = std::abs(a0.hi());
  // d_n = T_n(3): 1, 3, 17, 99, ...
  BigInt d_prev = 1, d = 3;
  int n = 1;
  while (2.0 * scale / d.get_d() > target && n < 200) {
    BigInt next = 6 * d - d_prev;
    d_prev = d;
    d = next;
    ++n;
  }
  Rational b = -1;
  Rational c = -Rational(d);
  DoubleDouble sum = 0.0;
  double abs_sum = 0.0;
  double weight_err = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const ExtReal w = rational_to_ext(c / d);
    const DoubleDouble ak = a(k);
    sum += w.value * ak;
    abs_sum += std::abs((w.value * ak).hi());
    weight_err += w.err * std::abs(ak.hi());
    b = b * (k + n) * (k - n) / (Rational(2 * k + 1, 2) * (k + 1));
  }
  AlternatingSum r;
  r.terms = n;
  r.truncation = 2.0 * scale / d.get_d();
  const double rounding = 4.0 * (n + 2) * DoubleDouble::epsilon() * abs_sum;
  r.value = ExtReal(sum, detail::up(r.truncation + rounding + weight_err));
  return r;
}

SpecialValue zeta(int s) {
  check_order(s, 2, "zeta");
  return {SpecialKind::kZeta, s, {}, zeta_value(s)};
}

SpecialValue eta(int s) {
  check_order(s, 1, "eta");
  if (s == 1) return {SpecialKind::kEta, s, {}, ln2_ext()};
  if (s % 2 == 0 && s <= kClosedFormTableOrder) {
    return {SpecialKind::kEta, s, {}, one_minus_pow2(s - 1) * zeta_even_closed(s)};
  }
  return {SpecialKind::kEta, s, {}, eta_series(s)};
}

SpecialValue lambda_fn(int s) {
  check_order(s, 2, "lambda_fn");
  return {SpecialKind::kLambda, s, {}, one_minus_pow2(s) * zeta_value(s)};
}

SpecialValue beta_fn(int s) {
  check_order(s, 1, "beta_fn");
  return {SpecialKind::kBeta, s, {}, beta_value(s)};
}

SpecialValue catalan() {
  SpecialValue v = beta_fn(2);
  v.kind = SpecialKind::kCatalan;
  return v;
}

}  // namespace multitrig
