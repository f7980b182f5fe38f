#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "multitrig/double_double.hpp"
#include "multitrig/ext_real.hpp"
#include "multitrig/quadrature.hpp"
#include "multitrig/rational.hpp"

using namespace multitrig;

namespace {

double rel_err(const DoubleDouble& got, const std::string& want) {
  const DoubleDouble w = parse_dd(want);
  return std::abs((got - w).to_double()) / std::abs(w.to_double());
}

}  // namespace

TEST_CASE("double-double kernels match 36-digit references") {
  const double tol = 1e-30;
  CHECK(rel_err(exp(parse_dd("0.7")), "2.01375270747047652162454938858306527") < tol);
  CHECK(rel_err(exp(parse_dd("-12.25")), "0.00000478511739212900908960977101943304762") < tol);
  CHECK(rel_err(log(parse_dd("0.3")), "-1.2039728043259359926227462177618385") < tol);
  CHECK(rel_err(log(parse_dd("1234.5")), "7.11842130878523419388788608090972728") < tol);
  CHECK(rel_err(sin(parse_dd("0.7")), "0.644217687237691053672614351398720183") < tol);
  CHECK(rel_err(cos(parse_dd("2.5")), "-0.801143615546933714833502790467351664") < tol);
  CHECK(rel_err(sin(DoubleDouble(10.0)), "-0.544021110889369813404747661851377282") < tol);
  CHECK(rel_err(tan(parse_dd("1.2")), "2.57215162212631893540999423603336396") < tol);
  CHECK(rel_err(sinpi(parse_dd("0.3")), "0.809016994374947424102293417182819059") < tol);
  CHECK(rel_err(tanpi(parse_dd("0.3")), "1.37638192047117353820720958191088768") < tol);
  CHECK(rel_err(tanpi(parse_dd("0.49")), "31.8205159537739580393395494319365654") < tol);
  CHECK(rel_err(sinpi(parse_dd("1.75")), "-0.707106781186547524400844362104849039") < tol);
  CHECK(tanpi(parse_dd("1.75")).to_double() == doctest::Approx(-1.0));
}

TEST_CASE("stored constants agree with their literals") {
  CHECK(to_string(dd_const::pi(), 31) == "3.141592653589793238462643383280");
  CHECK(to_string(dd_const::ln2(), 31) == "0.6931471805599453094172321214582");
}

TEST_CASE("z cot z crosses the series cutoff continuously") {
  const DoubleDouble below(0x1p-20 * 0.999999);
  const DoubleDouble above(0x1p-20 * 1.000001);
  const double jump = std::abs((z_cot_z(below) - z_cot_z(above)).to_double());
  CHECK(jump < 1e-17);
  CHECK(z_cot_z(DoubleDouble(0.0)).to_double() == 1.0);
}

TEST_CASE("decimal formatting") {
  CHECK(to_string(parse_dd("0.915965594177219015"), 18) == "0.915965594177219015");
  CHECK(to_string(parse_dd("1.2020569031595942853997"), 16) == "1.202056903159594");
  CHECK(to_string(parse_dd("-2.5e-7"), 3, true) == "-2.50e-07");
  CHECK(to_string(DoubleDouble(0.0), 5) == "0");
}

TEST_CASE("rational_to_ext rounding contract") {
  const ExtReal zero = rational_to_ext(Rational(0));
  CHECK(zero.value.to_double() == 0.0);
  CHECK(zero.err == 0.0);

  const ExtReal third = rational_to_ext(Rational(1, 3));
  CHECK(third.err > 0.0);
  CHECK(third.err <= DoubleDouble::epsilon() / 3.0);
  CHECK(to_string(third.value, 30) == "0.333333333333333333333333333333");

  const ExtReal dyadic = rational_to_ext(Rational(7, 16));
  CHECK(dyadic.value.to_double() == 0.4375);
  CHECK(dyadic.err == 0.0);
}

TEST_CASE("exact decimal parsing") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5e-2") == Rational(-3, 200));
  CHECK(parse_rational("22/7") == Rational(22, 7));
  CHECK(parse_rational("10") == Rational(10));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("ExtReal error propagation covers the true value") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 997);
  for (int i = 0; i < 200; ++i) {
    const Rational p(num(rng), den(rng)), q(num(rng), den(rng));
    if (q == 0) continue;
    const ExtReal x = rational_to_ext(p), y = rational_to_ext(q);
    const Rational exact_sum = p + q, exact_prod = p * q, exact_quot = p / q;
    for (const auto& [got, want] : {std::pair{x + y, exact_sum}, std::pair{x * y, exact_prod},
                                    std::pair{x / y, exact_quot}}) {
      const Rational diff = abs(dd_to_rational(got.value) - want);
      CHECK(diff.get_d() <= got.err);
    }
  }
}

TEST_CASE("integrate: linear function") {
  const auto r = integrate([](const DoubleDouble& t) { return t; }, 0.0, 1.0, 1e-20);
  CHECK(r.value.value.to_double() == 0.5);
  CHECK(std::abs((r.value.value - 0.5).to_double()) <= 1e-31);
  CHECK(r.err_estimate <= 1e-20);
}

TEST_CASE("integrate: polynomial exactness up to the design degree") {
  // Exact rational antiderivatives; random degree <= 2*20-1 on random intervals.
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coeff(-50, 50), deg(0, 2 * kGaussNodes - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = deg(rng);
    std::vector<Rational> a(static_cast<std::size_t>(d + 1));
    for (auto& c : a) c = Rational(coeff(rng), 8);
    const Rational lo(coeff(rng), 64), hi = lo + Rational(1 + (coeff(rng) + 50) % 5, 4);
    auto f = [&a](const DoubleDouble& t) {
      DoubleDouble s = 0.0;
      for (auto it = a.rbegin(); it != a.rend(); ++it) s = s * t + rational_to_dd(*it);
      return s;
    };
    Rational exact = 0;
    double scale = 0.0;
    const double m = std::max(std::abs(lo.get_d()), std::abs(hi.get_d()));
    for (std::size_t k = 0; k < a.size(); ++k) {
      mpq_class hk = 1, lk = 1;
      for (std::size_t j = 0; j <= k; ++j) {
        hk *= hi;
        lk *= lo;
      }
      exact += a[k] * (hk - lk) / static_cast<long>(k + 1);
      scale += std::abs(a[k].get_d()) * std::pow(m, static_cast<double>(k)) * Rational(hi - lo).get_d();
    }
    QuadratureOptions o;
    o.tol = 1e-300;
    o.max_panels = 1;  // a single panel must be exact
    QuadratureResult r;
    try {
      r = integrate(f, rational_to_dd(lo), rational_to_dd(hi), o);
    } catch (const QuadratureError& e) {
      r = e.partial();
    }
    const double diff = std::abs((r.value.value - rational_to_dd(exact)).to_double());
    CHECK(diff <= 10.0 * DoubleDouble::epsilon() * scale);
  }
}

TEST_CASE("integrate: log(2 sin(t/2)) over [0, 2 pi] vanishes") {
  auto f = [](const DoubleDouble& t) { return log(sin(ldexp(t, -1)) * 2.0); };
  const auto r = integrate(f, 0.0, dd_const::two_pi(), 1e-12, SingularityHints::log_both());
  CHECK(std::abs(r.value.value.to_double()) <= 1e-12);
  CHECK(r.flags.left_log);
  CHECK(r.flags.right_log);

  // Independent check: symmetric midpoint sums converge toward 0 as the grid
  // is refined (the singular cells contribute O(h log h)).
  double prev = 1.0;
  for (int n : {1000, 10000, 100000}) {
    const double h = 2 * M_PI / n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::log(2 * std::sin((i + 0.5) * h / 2));
    const double v = std::abs(s * h);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-4);
}

TEST_CASE("integrate: t tan(pi t) on [0, 1/4] matches the C_2 product") {
  const auto r = integrate([](const DoubleDouble& t) { return t * tanpi(t); }, 0.0, 0.25, 1e-15);
  // -log C_2(1/4)/pi from the odd-index product, summed to convergence (40 digits)
  const DoubleDouble product_value = parse_dd("0.01882390906976507119468844353518028502952");
  CHECK(std::abs((r.value.value - product_value).to_double()) <= std::max(r.err_estimate, 1e-15));

  // Direct truncated product in long double with the 1/n^2 tail bound.
  const long double x = 0.25L;
  long double log_c2 = 0.0L;
  const int odd_terms = 200000;
  for (int k = 0; k < odd_terms; ++k) {
    const long double m = k + 0.5L;
    log_c2 += m * (std::log1p(-x / m) - std::log1p(x / m)) + 2 * x;
  }
  const long double last = odd_terms - 0.5L;
  const long double tail = 8 * x * x * x / 3 / (2 * 2 * last);
  CHECK(std::abs(static_cast<double>(-log_c2 / M_PIl) - r.value.to_double()) <= tail / M_PIl + 1e-15);
}

TEST_CASE("integrate: errors are loud") {
  CHECK_THROWS_AS(integrate([](const DoubleDouble& t) { return t; }, 1.0, 0.0, 1e-10), QuadratureError);

  auto pole = [](const DoubleDouble& t) { return DoubleDouble(1.0) / (t - 1.0 / 3.0); };
  QuadratureOptions o;
  o.tol = 1e-20;
  o.max_panels = 64;
  try {
    integrate(pole, 0.0, 1.0, o);
    FAIL("expected a quadrature error");
  } catch (const QuadratureError& e) {
    CHECK(e.kind() == QuadratureError::Kind::kBudgetExhausted);
  }

  auto nan_inside = [](const DoubleDouble& t) {
    return t.hi() > 0.3 ? DoubleDouble(std::nan("")) : t;
  };
  try {
    integrate(nan_inside, 0.0, 1.0, 1e-10);
    FAIL("expected a quadrature error");
  } catch (const QuadratureError& e) {
    CHECK(e.kind() == QuadratureError::Kind::kNonFiniteSample);
  }
}

TEST_CASE("integrate is deterministic") {
  auto f = [](const DoubleDouble& t) { return log(sinpi(t)) * t * t; };
  const auto a = integrate(f, 0.0, 1.0, 1e-24, SingularityHints::log_both());
  const auto b = integrate(f, 0.0, 1.0, 1e-24, SingularityHints::log_both());
  CHECK(a.value.value == b.value.value);
  CHECK(a.subdivisions == b.subdivisions);
}
