#include <cmath>
#include <random>

#include "doctest.h"
#include "multitrig/dirichlet.hpp"
#include "multitrig/identities.hpp"
#include "multitrig/quadrature.hpp"

using namespace multitrig;

namespace {

double gap(const ExtReal& a, const ExtReal& b) { return std::abs((a.value - b.value).to_double()); }

const Candidate& find(const Resolution& r, const std::string& reading) {
  for (const auto& c : r.candidates) {
    if (c.reading == reading) return c;
  }
  FAIL("candidate not found: " << reading);
  return r.candidates.front();
}

}  // namespace

TEST_CASE("tan and cot moments") {
  for (int r = 1; r <= 4; ++r) {
    CHECK(tan_moment(r, 0.0).to_double() == 0.0);
    CHECK(cot_moment(r, 0.0).to_double() == 0.0);
  }
  CHECK(tan_moment(2, 0.4).value > tan_moment(2, 0.25).value);
  CHECK(tan_moment(2, 0.25).value > DoubleDouble(0.0));
  CHECK(cot_moment(2, 0.6).value > DoubleDouble(0.0));
  CHECK(std::isfinite(cot_moment(2, 0.6).to_double()));

  // -log C_2(1/4)/pi, frozen from an independent 40-digit product evaluation
  CHECK(std::abs((tan_moment(1, 0.25).value - parse_dd("0.01882390906976507119468844353518028502952")).to_double()) <
        1e-28);

  CHECK_THROWS_AS(tan_moment(1, 0.5), DomainError);
  CHECK_THROWS_AS(cot_moment(1, 1.0), DomainError);
  CHECK_THROWS_AS(cot_moment(0, 0.5), DomainError);
}

TEST_CASE("positivity and monotonicity of the moments on a grid") {
  for (int r = 1; r <= 4; ++r) {
    DoubleDouble prev_tan = 0.0, prev_cot = 0.0;
    for (int i = 1; i <= 9; ++i) {
      const DoubleDouble x = DoubleDouble(i) / 20.0;
      const DoubleDouble t = tan_moment(r, x).value;
      const DoubleDouble c = cot_moment(r, ldexp(x, 1)).value;
      CHECK(t >= DoubleDouble(0.0));
      CHECK(c >= DoubleDouble(0.0));
      CHECK(t >= prev_tan);
      CHECK(c >= prev_cot);
      prev_tan = t;
      prev_cot = c;
    }
  }
}

TEST_CASE("linearity of moments under random rational combinations") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Rational> a(6);
    for (auto& c : a) c = Rational(num(rng), den(rng));
    const RationalPoly p(a);
    const DoubleDouble x(0.3);
    const ExtReal combined = integrate([&p](const DoubleDouble& t) { return p.eval(t) * tanpi(t); }, 0.0, x, 1e-26).value;
    ExtReal summed = 0.0;
    for (int k = 0; k <= p.degree(); ++k) summed += rational_to_ext(p.coeff(k)) * tan_moment(k, x);
    CHECK(gap(combined, summed) <= 1e-20);
  }
}

TEST_CASE("sinlog moments") {
  const ExtReal z3 = zeta(3).val;
  const ExtReal two_pi = ExtReal(2.0) * pi_ext();
  CHECK(gap(sinlog_rhs(2), ExtReal(-2.0) * two_pi * z3) < 1e-28);
  CHECK(gap(sinlog_rhs(3), ExtReal(-3.0) * two_pi * two_pi * z3) < 1e-28);
  // r = 4: -4!/3! (2pi)^3 zeta(3) + 4!/1! (2pi) zeta(5)
  const ExtReal r4 = ExtReal(-4.0) * two_pi * two_pi * two_pi * z3 + ExtReal(24.0) * two_pi * zeta(5).val;
  CHECK(gap(sinlog_rhs(4), r4) < 1e-27);
  for (int r = 2; r <= 10; ++r) {
    const IdentityReport rep = sinlog_moment(r);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-9);
  }
  CHECK_THROWS_AS(sinlog_moment(1), DomainError);
  CHECK_THROWS_AS(sinlog_moment(11), DomainError);
}

TEST_CASE("Koyama-Kurokawa") {
  const DoubleDouble pi = dd_const::pi();
  for (const auto& [r, x] : {std::pair{2, ldexp(pi, -1)}, std::pair{3, ldexp(pi, -2)}, std::pair{6, DoubleDouble(3.0)}}) {
    const IdentityReport rep = koyama_kurokawa_check(r, x);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-9);
  }
  // at x = pi/2 the rhs reduces to -pi log S_2(1/2); compare with the S_2 product
  const ExtReal lhs = koyama_kurokawa_check(2, ldexp(pi, -1)).lhs;
  const MultiFunValue s2 = log_multisin_product(2, 0.5, 200000, true);
  CHECK(gap(lhs, -(pi_ext() * s2.logValue)) <= 1e-20);
  // both sides vanish as x -> 0 for r >= 3
  const IdentityReport tiny = koyama_kurokawa_check(3, 1e-6);
  CHECK(std::abs(tiny.lhs.to_double()) < 1e-10);
  CHECK(std::abs(tiny.rhs.to_double()) < 1e-10);
  CHECK(tiny.pass);
  CHECK_THROWS_AS(koyama_kurokawa_check(2, pi), DomainError);
}

TEST_CASE("log cos moments") {
  for (int r = 0; r <= 12; ++r) {
    const IdentityReport rep = coslog_moment(r);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-10);
  }
  // r = 0: (4/pi) int_0^{pi/4} log cos = -log 2 + 2G/pi
  const ExtReal r0 = -ln2_ext() + ExtReal(2.0) / pi_ext() * catalan().val;
  CHECK(gap(coslog_rhs(0, resolved::kZetaESignShift), r0) < 1e-29);
  for (int r = 2; r <= 12; ++r) {
    const IdentityReport rep = hk_cos_integral_check(r);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-10);
    const ExtReal rescaled = pow(ExtReal(2.0) / pi_ext(), r - 1) * rep.lhs;
    CHECK(gap(rescaled, coslog_integral(r - 2)) <= 1e-12);
  }
}

TEST_CASE("Orr integral and Euler's lambda(3)") {
  for (int r = 1; r <= 8; ++r) {
    const IdentityReport rep = orr_integral_check(r);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-9);
  }
  // int_0^{pi/2} x cot x dx = (pi/2) log 2
  CHECK(gap(orr_rhs(1, true), pi_ext() * ln2_ext() * ExtReal(0.5)) < 1e-29);
  CHECK(gap(orr_rhs(3, true), orr_rhs(3, false)) == 0.0);
  CHECK(gap(orr_rhs(2, true), orr_rhs(2, false)) > 1e-2);

  const IdentityReport e = euler_lambda3_check();
  CHECK(e.pass);
  CHECK(e.residual <= 1e-10);
  CHECK(gap(lambda_fn(3).val, ExtReal(0.875) * zeta(3).val) < 1e-30);
  const ExtReal I = (e.lhs - rational_to_ext(resolved::kEulerKappaPiSquaredFactor) * pi_ext() * pi_ext() * ln2_ext()) *
                    ExtReal(0.5);
  CHECK(I.value < DoubleDouble(0.0));
}

TEST_CASE("polynomial moments") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7), deg(1, 9);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Rational> a(static_cast<std::size_t>(deg(rng) + 1));
    for (std::size_t i = 1; i < a.size(); ++i) a[i] = Rational(num(rng), den(rng));
    const RationalPoly p(a);
    if (p.is_zero()) continue;
    CHECK(coslog_poly_check(p).pass);
    CHECK(cot_poly_check(p).pass);
    CHECK(cot_poly_check(p).residual <= 1e-10);
  }
}

TEST_CASE("resolutions match the encoded readings") {
  const Resolution orr = resolve_orr_interval();
  CHECK(orr.unique);
  CHECK(orr.winner == (resolved::kOrrDeltaInsideBracket ? "[0, pi/2], delta inside bracket"
                                                        : "[0, pi/2], delta outside bracket"));
  CHECK_FALSE(find(orr, "[0, 2pi] as displayed").finite);

  const Resolution euler = resolve_euler_constant();
  CHECK(euler.unique);
  CHECK(resolved::kEulerKappaPiSquaredFactor == Rational(1, 4));
  CHECK(euler.winner == "(pi^2/4) log 2");
  CHECK(find(euler, "pi^2/log 2 (displayed)").residual > 1.0);

  const Resolution poly = resolve_coslog_poly_terms();
  CHECK(poly.unique);
  CHECK(resolved::kCosLogPolyIntegralLog2);
  CHECK(poly.winner == "log2 coefficient -int_0^1 P, zeta_E (-1)^k[4^k P'(0) - P'(1)/2]");

  const Resolution cot = resolve_cot_index();
  CHECK(cot.unique);
  CHECK(resolved::kCotIndexShift == 1);
  CHECK(cot.winner == "(2^{r+1}/pi) log S_{r+1}(x/2)");
  CHECK(find(cot, "(2^r/pi) log S_r(x/2) (displayed)").residual > 1e-3);

  const Resolution sign = resolve_zeta_e_sign();
  CHECK(sign.unique);
  CHECK(resolved::kZetaESignShift == 1);
  CHECK(sign.winner == "(-1)^{k-1}");
}

TEST_CASE("default suites pass") {
  for (const auto& rep : identity_suite()) {
    INFO(identity_name(rep.id) << " " << rep.params << " residual " << rep.residual);
    CHECK(rep.pass);
  }
  for (const auto& rep : lemma_suite()) {
    INFO(identity_name(rep.id) << " " << rep.params << " residual " << rep.residual);
    CHECK(rep.pass);
  }
}
