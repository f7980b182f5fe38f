#include <cmath>
#include <vector>

#include "doctest.h"
#include "multitrig/dirichlet.hpp"

using namespace multitrig;

namespace {

// Bernoulli numbers by the Akiyama-Tanigawa transform (B_1 = +1/2 there).
std::vector<Rational> bernoulli_at(int n) {
  std::vector<Rational> out, row(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    row[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      row[static_cast<std::size_t>(j - 1)] = j * (row[static_cast<std::size_t>(j - 1)] - row[static_cast<std::size_t>(j)]);
    }
    out.push_back(row[0]);
  }
  return out;
}

Rational rpow(const Rational& q, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

// Euler-Maclaurin value of sum_{k>=0} (a k + b)^-s, s >= 2, in exact rationals.
// The first 2J-1 derivative corrections are kept; with a N + b >= 200 and
// s <= 40 the remainder is below 1e-33.
Rational hurwitz_oracle(int a, int b, int s) {
  static const std::vector<Rational> B = bernoulli_at(40);
  const int J = 15;
  int N = 0;
  while (a * N + b < 200) ++N;
  Rational sum = 0;
  for (int k = 0; k < N; ++k) sum += 1 / rpow(Rational(a * k + b), s);
  const Rational base = a * N + b;
  sum += 1 / (rpow(base, s - 1) * a * (s - 1));
  sum += 1 / (2 * rpow(base, s));
  Rational fact = 1;  // (2j)!
  for (int j = 1; j <= J; ++j) {
    fact *= (2 * j - 1) * (2 * j);
    const int m = 2 * j - 1;
    Rational rising = 1;  // (s)_m
    for (int i = 0; i < m; ++i) rising *= s + i;
    // f^{(m)}(N) = (-a)^m (s)_m base^{-s-m}, m odd
    const Rational deriv = -rpow(Rational(a), m) * rising / rpow(base, s + m);
    sum -= B[static_cast<std::size_t>(2 * j)] / fact * deriv;
  }
  return sum;
}

void check_close(const ExtReal& v, const Rational& oracle, double tol) {
  const double diff = std::abs((v.value - rational_to_dd(oracle)).to_double());
  CHECK(diff <= v.err + tol);
  CHECK(diff <= 1e-28);
}

}  // namespace

TEST_CASE("exact number tables") {
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(13) == 0);
  CHECK(euler_number(10) == -50521);
  CHECK(euler_number(7) == 0);
  const auto at = bernoulli_at(64);
  for (int n = 2; n <= 64; ++n) CHECK(bernoulli(n) == at[static_cast<std::size_t>(n)]);
}

TEST_CASE("zeta against Euler-Maclaurin oracles") {
  check_close(zeta(2).val, hurwitz_oracle(1, 1, 2), 1e-30);
  check_close(zeta(3).val, hurwitz_oracle(1, 1, 3), 1e-30);
  check_close(zeta(4).val, hurwitz_oracle(1, 1, 4), 1e-30);
  CHECK(to_string(zeta(3).val.value, 17) == "1.2020569031595943");
  CHECK(to_string(zeta(2).val.value, 10) == "1.644934067");
}

TEST_CASE("eta, lambda, beta against oracles") {
  CHECK(to_string(eta(1).val.value, 16) == "0.6931471805599453");
  for (int s = 2; s <= 6; ++s) {
    check_close(eta(s).val, hurwitz_oracle(2, 1, s) - hurwitz_oracle(2, 2, s), 1e-30);
    check_close(lambda_fn(s).val, hurwitz_oracle(2, 1, s), 1e-30);
    check_close(beta_fn(s).val, hurwitz_oracle(4, 1, s) - hurwitz_oracle(4, 3, s), 1e-30);
  }
  const DoubleDouble pi = dd_const::pi();
  CHECK(std::abs((beta_fn(1).val.value - pi / 4.0).to_double()) < 1e-31);
  CHECK(std::abs((beta_fn(3).val.value - pi * pi * pi / 32.0).to_double()) < 1e-31);
  CHECK(std::abs((lambda_fn(2).val.value - pi * pi / 8.0).to_double()) < 1e-31);
  CHECK(std::abs((lambda_fn(4).val.value - sqr(sqr(pi)) / 96.0).to_double()) < 1e-30);
  CHECK(std::abs((eta(2).val.value - pi * pi / 12.0).to_double()) < 1e-31);
}

TEST_CASE("Catalan's constant") {
  const SpecialValue g = catalan();
  CHECK(g.kind == SpecialKind::kCatalan);
  CHECK(g.val.value == beta_fn(2).val.value);
  CHECK(to_string(g.val.value, 18) == "0.915965594177219015");
  CHECK(g.val.value > DoubleDouble(0.9159655941));
  CHECK(g.val.value < DoubleDouble(0.9159655942));
}

TEST_CASE("order range errors") {
  CHECK_THROWS_AS(zeta(1), OrderOutOfRange);
  CHECK_THROWS_AS(lambda_fn(1), OrderOutOfRange);
  CHECK_THROWS_AS(eta(0), OrderOutOfRange);
  CHECK_THROWS_AS(beta_fn(0), OrderOutOfRange);
  CHECK_THROWS_AS(zeta(kMaxDirichletOrder + 1), OrderOutOfRange);
}

TEST_CASE("error bounds stay below 1e-25 up to order 64") {
  for (int s = 1; s <= 64; ++s) {
    if (s >= 2) {
      CHECK(zeta(s).val.err <= 1e-25);
      CHECK(lambda_fn(s).val.err <= 1e-25);
    }
    CHECK(eta(s).val.err <= 1e-25);
    CHECK(beta_fn(s).val.err <= 1e-25);
  }
}

TEST_CASE("relation web for 2 <= s <= 40") {
  for (int s = 2; s <= 40; ++s) {
    const ExtReal z = zeta(s).val, e = eta(s).val, l = lambda_fn(s).val;
    const ExtReal f_eta(DoubleDouble(1.0) - DoubleDouble(std::ldexp(1.0, 1 - s)));
    const ExtReal f_lam(DoubleDouble(1.0) - DoubleDouble(std::ldexp(1.0, -s)));
    CHECK(consistent(e, f_eta * z, 0.0));
    CHECK(consistent(l, f_lam * z, 0.0));
    const ExtReal half = (z + e) * ExtReal(0.5);
    CHECK(consistent(l, half, 0.0));
    if (s <= 6) {
      // independent oracles for every kind at small orders
      check_close(z, hurwitz_oracle(1, 1, s), 1e-30);
    }
  }
  check_close(zeta(40).val, hurwitz_oracle(1, 1, 40), 1e-30);
  check_close(beta_fn(40).val, hurwitz_oracle(4, 1, 40) - hurwitz_oracle(4, 3, 40), 1e-30);
  check_close(zeta(37).val, hurwitz_oracle(1, 1, 37), 1e-30);
}

TEST_CASE("monotonicity in the order") {
  for (int s = 2; s < 60; ++s) {  // beyond this 3^-s falls under working precision
    CHECK(zeta(s + 1).val.value < zeta(s).val.value);
    CHECK(lambda_fn(s + 1).val.value < lambda_fn(s).val.value);
    CHECK(eta(s + 1).val.value > eta(s).val.value);
    CHECK(beta_fn(s + 1).val.value > beta_fn(s).val.value);
    CHECK(zeta(s).val.value > DoubleDouble(1.0));
    CHECK(beta_fn(s).val.value < DoubleDouble(1.0));
  }
}

TEST_CASE("acceleration agrees with long direct partial sums") {
  const long terms = 10000000;
  for (int s = 1; s <= 3; ++s) {
    long double eta_sum = 0.0L, beta_sum = 0.0L;
    for (long k = terms - 1; k >= 0; --k) {
      const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
      eta_sum += sign / std::pow(static_cast<long double>(k + 1), s);
      beta_sum += sign / std::pow(static_cast<long double>(2 * k + 1), s);
    }
    // alternating tail bounded by its first term; rounding of 1e7 long double adds
    const long double eta_tail = 1.0L / std::pow(static_cast<long double>(terms + 1), s);
    const long double beta_tail = 1.0L / std::pow(static_cast<long double>(2 * terms + 1), s);
    const double rounding = 1e-12;
    const AlternatingSum e = alternating_sum([s](int k) { return DoubleDouble(1.0) / pow(DoubleDouble(k + 1.0), s); });
    const AlternatingSum b = alternating_sum([s](int k) { return DoubleDouble(1.0) / pow(DoubleDouble(2.0 * k + 1.0), s); });
    CHECK(std::abs(e.value.to_double() - static_cast<double>(eta_sum)) <= static_cast<double>(eta_tail) + rounding);
    CHECK(std::abs(b.value.to_double() - static_cast<double>(beta_sum)) <= static_cast<double>(beta_tail) + rounding);
    CHECK(e.terms <= 45);
    CHECK(e.truncation <= 1e-32);
  }
}
