#include <chrono>
#include <cmath>

#include "doctest.h"
#include "multitrig/multifun.hpp"

using namespace multitrig;

namespace {

double diff(const ExtReal& a, const DoubleDouble& b) { return std::abs((a.value - b).to_double()); }

// log S_2(x) = x + sum_n [n log((1 - x/n)/(1 + x/n)) + 2x], straight from the
// product, in long double. Omitted terms are bounded by 2x^3/(3(1-u^2)) / M.
long double log_s2_direct(long double x, long M, long double& tail) {
  long double s = 0.0L;
  for (long n = M; n >= 1; --n) {
    const long double nn = static_cast<long double>(n);
    s += nn * (std::log1p(-x / nn) - std::log1p(x / nn)) + 2 * x;
  }
  const long double u = x / (M + 1);
  tail = 2 * x * x * x / 3 / (1 - u * u) / M;
  return x + s;
}

// log C_3(x) = sum_{n odd} [(n/2)^2 log(1 - x^2/(n/2)^2) + x^2].
long double log_c3_direct(long double x, long odd_terms, long double& tail) {
  long double s = 0.0L;
  for (long k = odd_terms - 1; k >= 0; --k) {
    const long double m = (2 * k + 1) / 2.0L;
    s += m * m * std::log1p(-(x / m) * (x / m)) + x * x;
  }
  const long double nf = 2.0L * odd_terms + 1;
  tail = 2 * x * x * x * x / 4 * 4 * (1 / (nf * nf) + 1 / (2 * nf)) * 2;
  return s;
}

}  // namespace

TEST_CASE("log_Pr") {
  for (int r = 1; r <= 6; ++r) CHECK(log_Pr(r, 0.0).value.to_double() == 0.0);
  const DoubleDouble half = 0.5;
  CHECK(diff(log_Pr(1, half), log(half) + half) < 1e-31);

  // 60-term direct tail in exact rationals
  Rational tail = 0, p = Rational(1, 10000);
  for (int j = 4; j < 64; ++j) {
    tail -= p / j;
    p /= 10;
  }
  const ExtReal v = log_Pr(3, parse_dd("0.1"));
  CHECK(diff(v, rational_to_dd(tail)) < 1e-35);
  // 1e-4/4 + 1e-5/5 + 1e-6/6 + ... = 2.7182...e-5
  CHECK(to_string(v.value, 5, true) == "-2.7182e-05");

  // both branches agree near the switch
  const DoubleDouble u = parse_dd("0.5");
  const ExtReal series = log_Pr(4, u);
  DoubleDouble direct = log(DoubleDouble(1.0) - u);
  for (int j = 1; j <= 4; ++j) direct += pow(u, j) / static_cast<double>(j);
  CHECK(diff(series, direct) < 1e-30);

  CHECK_THROWS_AS(log_Pr(2, 1.0), DomainError);
  CHECK_THROWS_AS(log_Pr(2, -1.5), DomainError);
}

TEST_CASE("closed forms at order one") {
  const double half_log2 = 0.5 * 0.69314718055994530942;
  CHECK(log_multicos(1, 0.25).logValue.to_double() == doctest::Approx(half_log2).epsilon(1e-15));
  CHECK(log_multisin(1, 0.25).logValue.to_double() == doctest::Approx(half_log2).epsilon(1e-15));
  CHECK(log_multicos(1, 0.25).route == Route::kClosedForm);
  // C_1 = 2 cos(pi x), so log C_1(0) = log 2
  CHECK(diff(log_multicos(1, 0.0).logValue, dd_const::ln2()) < 1e-31);
  CHECK_THROWS_AS(log_multisin(1, 0.0), DomainError);
}

TEST_CASE("zero argument") {
  for (int r = 2; r <= 8; ++r) {
    CHECK(log_multicos(r, 0.0).logValue.to_double() == 0.0);
    CHECK(log_multisin(r, 0.0).logValue.to_double() == 0.0);
    CHECK(log_multicos_product(r, 0.0, 1000).logValue.to_double() == 0.0);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(log_multicos(2, 0.5), DomainError);
  CHECK_THROWS_AS(log_multicos(2, -0.1), DomainError);
  CHECK_THROWS_AS(log_multicos(0, 0.1), DomainError);
  CHECK_THROWS_AS(log_multisin(2, 1.0), DomainError);
  CHECK_THROWS_AS(verify_eq_1_14(1), DomainError);
  CHECK_THROWS_AS(verify_eq_1_14(13), DomainError);
}

TEST_CASE("log C_3(1/4) special value") {
  const DoubleDouble pi = dd_const::pi();
  const DoubleDouble expected = dd_const::ln2() / 32.0 - catalan().val.value / (pi * 4.0) +
                                eta(3).val.value * 7.0 / (pi * pi * 16.0);
  CHECK(diff(log_multicos(3, 0.25).logValue, expected) < 1e-22);
}

TEST_CASE("eq 1.14 for 2 <= r <= 12") {
  for (int r = 2; r <= 12; ++r) {
    const ExtReal res = verify_eq_1_14(r);
    CHECK(res.value.to_double() <= 1e-12);
    CHECK(res.value.to_double() <= res.err + 1e-20);
  }
  const MultiFunValue p = log_multicos_product(5, 0.25);
  CHECK(diff(p.logValue, log_multicos(5, 0.25).logValue.value) <= p.truncation.tailBound + 1e-12);
  const MultiFunValue p3 = log_multicos_product(3, 0.25);
  CHECK(verify_eq_1_14(3, Route::kProduct).value.to_double() <= p3.truncation.tailBound + 1e-12);
}

TEST_CASE("zeta(3) corollary") {
  const ExtReal res = verify_zeta3_corollary();
  CHECK(res.value.to_double() <= 1e-11);
  const MultiFunValue p3 = log_multicos_product(3, 0.25);
  const ExtReal res_p = verify_zeta3_corollary(Route::kProduct);
  const double scale = 64.0 * M_PI * M_PI / 21.0;
  CHECK(res_p.value.to_double() <= scale * p3.truncation.tailBound + 1e-11);
  // the corollary is the r = 3 case rearranged
  CHECK(std::abs(res.value.to_double() - scale * verify_eq_1_14(3).value.to_double()) <= 1e-12);
}

TEST_CASE("route agreement") {
  for (int r = 2; r <= 6; ++r) {
    for (double x : {0.1, 0.25, 0.4}) {
      const MultiFunValue p = log_multicos_product(r, x);
      const MultiFunValue q = log_multicos_integral(r, x);
      CHECK(diff(p.logValue, q.logValue.value) <= p.truncation.tailBound + 1e-8);
      const MultiFunValue ps = log_multisin_product(r, x);
      const MultiFunValue qs = log_multisin_integral(r, x);
      CHECK(diff(ps.logValue, qs.logValue.value) <= ps.truncation.tailBound + 1e-8);
    }
  }
}

TEST_CASE("tail-corrected products reach working precision") {
  for (int r = 2; r <= 4; ++r) {
    for (double x : {0.1, 0.3, 0.45}) {
      const MultiFunValue p = log_multicos_product(r, x, 200000, true);
      const ExtReal q = log_multicos_integral(r, x).logValue;
      CHECK(consistent(p.logValue, q, 0.0));
      CHECK(p.logValue.err < 1e-22);
    }
    for (double y : {0.1, 0.5, 0.8}) {
      const MultiFunValue p = log_multisin_product(r, y, 200000, true);
      const ExtReal q = log_multisin_integral(r, y).logValue;
      CHECK(consistent(p.logValue, q, 0.0));
    }
  }
}

TEST_CASE("independent long double products") {
  long double tail = 0.0L;
  const long double s2 = log_s2_direct(0.25L, 1000000, tail);
  CHECK(std::abs(log_multisin(2, 0.25).logValue.to_double() - static_cast<double>(s2)) <= tail + 1e-14);
  const long double c3 = log_c3_direct(0.25L, 1000000, tail);
  CHECK(std::abs(log_multicos(3, 0.25).logValue.to_double() - static_cast<double>(c3)) <= tail + 1e-14);
}

TEST_CASE("tail bound shrinks under doubling") {
  for (int r : {2, 3, 5}) {
    double prev = log_multicos_product(r, 0.3, 1000).truncation.tailBound;
    for (std::size_t n = 2000; n <= 64000; n *= 2) {
      const double cur = log_multicos_product(r, 0.3, n).truncation.tailBound;
      CHECK(std::isfinite(cur));
      CHECK(prev / cur >= 1.9);
      prev = cur;
    }
  }
}

TEST_CASE("sign and monotonicity") {
  for (int r = 1; r <= 6; ++r) {
    DoubleDouble prev = 0.0;
    for (int i = 1; i < 20; ++i) {
      const DoubleDouble x = DoubleDouble(i) / 40.0;
      const DoubleDouble v = log_multicos(r + 1, x).logValue.value;
      CHECK(v < DoubleDouble(0.0));
      CHECK(-v > prev);
      prev = -v;
    }
  }
}

TEST_CASE("double angle at order one") {
  for (int i = 1; i < 25; ++i) {
    const DoubleDouble x = DoubleDouble(i) / 100.0;
    const ExtReal s = log_multicos(1, x).logValue + log_multisin(1, x).logValue;
    CHECK(diff(s, log(ldexp(sinpi(ldexp(x, 1)), 1))) <= 1e-25);
  }
}
