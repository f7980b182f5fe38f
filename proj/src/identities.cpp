#include "multitrig/identities.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "multitrig/dirichlet.hpp"
#include "multitrig/quadrature.hpp"

namespace multitrig {

namespace {

constexpr double kInnerTol = 1e-22;
constexpr std::size_t kOracleTerms = 200000;

ExtReal q(const Rational& v) { return rational_to_ext(v); }
ExtReal fact(int n) { return q(Rational(factorial(static_cast<unsigned>(n)))); }
ExtReal binom(int n, int k) { return q(Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)))); }
ExtReal sgn(int k) { return ExtReal(k % 2 == 0 ? 1.0 : -1.0); }
// sin(r pi / 2)
int sin_half(int r) { return (r % 2 == 0) ? 0 : ((r % 4 == 1) ? 1 : -1); }

std::string fmt_sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

std::string param_r(int r) { return "r=" + std::to_string(r); }
std::string param_rx(int r, const DoubleDouble& x) { return "r=" + std::to_string(r) + ",x=" + to_string(x, 17); }

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

ExtReal integral(const Integrand& f, const DoubleDouble& a, const DoubleDouble& b, SingularityHints hints = {},
                 double tol = kInnerTol) {
  if (!(a < b)) return ExtReal(0.0);
  return integrate(f, a, b, tol, hints).value;
}

// residual of a candidate reading over a set of probes
double worst(const std::vector<std::pair<ExtReal, ExtReal>>& pairs) {
  double w = 0.0;
  for (const auto& [a, b] : pairs) w = std::max(w, std::abs((a.value - b.value).to_double()));
  return w;
}

void pick_winner(Resolution& res) {
  int fits = 0;
  for (const Candidate& c : res.candidates) {
    if (c.finite && c.residual <= res.tol) {
      if (fits == 0) res.winner = c.reading;
      ++fits;
    }
  }
  res.unique = fits == 1;
}

std::string poly_string(const RationalPoly& p) {
  std::string s;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + rational_to_string(p.coeff(k)) + ")t^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

// Fixed probe polynomials with P(0) = 0.
std::vector<RationalPoly> probe_polys() {
  return {
      RationalPoly({0, 1}),
      RationalPoly({0, 0, 0, 1}),
      RationalPoly({0, Rational(1, 2), -3, Rational(5, 7)}),
      RationalPoly({0, -2, Rational(1, 3), 0, Rational(-7, 5), 1}),
      RationalPoly({0, 1, -1, Rational(2, 9), 0, 3, Rational(-1, 4), Rational(5, 11)}),
      weight_poly(1),
      weight_poly(2) * RationalPoly({1, Rational(-3, 2), 2}),
  };
}

}  // namespace

const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::kSinLogMoment: return "sinlog-moment";
    case IdentityId::kOrrCotIntegral: return "orr-cot-integral";
    case IdentityId::kEulerLambda3: return "euler-lambda3";
    case IdentityId::kKoyamaKurokawa: return "koyama-kurokawa";
    case IdentityId::kMultiCosQuarter: return "multicos-quarter";
    case IdentityId::kZeta3Corollary: return "zeta3-corollary";
    case IdentityId::kTanMoment: return "tan-moment";
    case IdentityId::kHalfCosMoment: return "halfcos-moment";
    case IdentityId::kCosLogMoment: return "coslog-moment";
    case IdentityId::kCosLogPolynomial: return "coslog-polynomial";
    case IdentityId::kCotMoment: return "cot-moment";
    case IdentityId::kCotPolynomial: return "cot-polynomial";
  }
  return "unknown";
}

IdentityReport make_report(IdentityId id, std::string params, const ExtReal& lhs, const ExtReal& rhs, double tol,
                           std::string notes) {
  IdentityReport r;
  r.id = id;
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::abs((lhs.value - rhs.value).to_double());
  r.tol = tol;
  r.pass = r.residual <= lhs.err + rhs.err + tol;
  r.notes = std::move(notes);
  return r;
}

// ---- moments ---------------------------------------------------------------

ExtReal tan_moment(int r, const DoubleDouble& x) {
  require(r >= 0, "tan_moment: r must be >= 0");
  require(x >= DoubleDouble(0.0) && x < DoubleDouble(0.5), "tan_moment: x outside [0, 1/2)");
  return integral([r](const DoubleDouble& t) { return pow(t, r) * tanpi(t); }, 0.0, x);
}

ExtReal cot_moment(int r, const DoubleDouble& x) {
  require(r >= 1, "cot_moment: r must be >= 1");
  require(x >= DoubleDouble(0.0) && x < DoubleDouble(1.0), "cot_moment: x outside [0, 1)");
  // t^r cot(pi t/2) = t^{r-1} (2/pi) z cot z, z = pi t/2
  return integral(
      [r](const DoubleDouble& t) {
        const DoubleDouble z = dd_const::half_pi() * t;
        return pow(t, r - 1) * z_cot_z(z) / dd_const::half_pi();
      },
      0.0, x, SingularityHints::pole_left());
}

ExtReal coslog_integral(int r) {
  require(r >= 0, "coslog_integral: r must be >= 0");
  return integral([r](const DoubleDouble& t) { return pow(t, r) * log(cospi(ldexp(t, -2))); }, 0.0, 1.0);
}

ExtReal halfcos_integral(int r) {
  require(r >= 2, "halfcos_integral: r must be >= 2");
  return integral([r](const DoubleDouble& t) { return pow(t, r - 2) * log(cos(ldexp(t, -1))); }, 0.0,
                  dd_const::half_pi());
}

ExtReal orr_integral(int r) {
  require(r >= 1, "orr_integral: r must be >= 1");
  return integral([r](const DoubleDouble& t) { return pow(t, r - 1) * z_cot_z(t); }, 0.0, dd_const::half_pi(),
                  SingularityHints::pole_left());
}

// ---- right-hand sides ------------------------------------------------------

ExtReal sinlog_rhs(int r) {
  const ExtReal two_pi = ExtReal(2.0) * pi_ext();
  ExtReal s = 0.0;
  for (int k = 1; k <= r / 2; ++k) {
    s += sgn(k) * fact(r) / fact(r - 2 * k + 1) * pow(two_pi, r - 2 * k + 1) * zeta(2 * k + 1).val;
  }
  return s;
}

ExtReal orr_rhs(int r, bool delta_inside_bracket) {
  const ExtReal pi = pi_ext();
  ExtReal bracket = ln2_ext();
  for (int k = 1; k <= r / 2; ++k) {
    const ExtReal four_k(std::ldexp(1.0, 2 * k) - 1.0);
    bracket += fact(r) * sgn(k) * four_k / (fact(r - 2 * k) * pow(ExtReal(2.0) * pi, 2 * k)) * zeta(2 * k + 1).val;
  }
  ExtReal delta = 0.0;
  if (r % 2 == 0) delta = fact(r) * sgn(r / 2) * zeta(r + 1).val / pow(pi, r);
  const ExtReal scale = pow(pi / ExtReal(2.0), r);
  return delta_inside_bracket ? scale * (bracket + delta) : scale * bracket + delta;
}

ExtReal coslog_rhs(int r, int zeta_e_sign_shift) {
  const ExtReal pi = pi_ext();
  ExtReal s = -ln2_ext() / ExtReal(static_cast<double>(r + 1));
  if (sin_half(r) != 0) {
    s -= fact(r) * ExtReal(static_cast<double>(sin_half(r))) * ExtReal(std::ldexp(1.0, r + 1)) * eta(r + 2).val /
         pow(pi, r + 1);
  }
  for (int k = 0; k <= r / 2; ++k) {
    s += sgn(k) * fact(2 * k) * binom(r, 2 * k) * ExtReal(std::ldexp(1.0, 2 * k + 1)) * beta_fn(2 * k + 2).val /
         pow(pi, 2 * k + 1);
  }
  ExtReal z = 0.0;
  for (int k = 1; k <= (r + 1) / 2; ++k) {
    z += sgn(k + zeta_e_sign_shift) * fact(2 * k - 1) * binom(r, 2 * k - 1) * eta(2 * k + 1).val / pow(pi, 2 * k);
  }
  return s + z * ExtReal(0.5);
}

ExtReal halfcos_rhs(int r) {
  const ExtReal half_pi = pi_ext() / ExtReal(2.0);
  ExtReal s = -ln2_ext() / ExtReal(static_cast<double>(r - 1)) * pow(half_pi, r - 1);
  if (sin_half(r) != 0) s += fact(r - 2) * ExtReal(static_cast<double>(sin_half(r))) * eta(r).val;
  for (int k = 0; k <= (r - 2) / 2; ++k) {
    s += sgn(k) * fact(2 * k) * binom(r - 2, 2 * k) * pow(half_pi, r - 2 * k - 2) * beta_fn(2 * k + 2).val;
  }
  for (int k = 1; k <= (r - 1) / 2; ++k) {  // ceil((r-2)/2)
    s += sgn(k - 1) * fact(2 * k - 1) / ExtReal(std::ldexp(1.0, 2 * k + 1)) * binom(r - 2, 2 * k - 1) *
         pow(half_pi, r - 2 * k - 1) * eta(2 * k + 1).val;
  }
  return s;
}

ExtReal coslog_poly_rhs(const RationalPoly& p, bool log2_from_integral, bool resolved_zeta_e) {
  require(p.coeff(0) == 0, "coslog_poly_rhs: requires P(0) = 0");
  const ExtReal pi = pi_ext();
  const int n = p.degree();
  ExtReal s = log2_from_integral ? -q(p.integral01()) * ln2_ext()
                                 : -q(p(Rational(1)) / (n + 1)) * ln2_ext();
  for (int k = 0; k <= n / 2; ++k) {
    const Rational c = derivative_at(p, 2 * k, 1) * (BigInt(1) << static_cast<unsigned>(2 * k + 1)) * (k % 2 == 0 ? 1 : -1);
    s += q(c) * beta_fn(2 * k + 2).val / pow(pi, 2 * k + 1);
  }
  for (int k = 1; k <= (n + 1) / 2; ++k) {
    const Rational d1 = derivative_at(p, 2 * k - 1, 1), d0 = derivative_at(p, 2 * k - 1, 0);
    const Rational four_k(BigInt(1) << static_cast<unsigned>(2 * k));
    const int sign = k % 2 == 0 ? 1 : -1;
    const Rational c = resolved_zeta_e ? Rational(sign * (four_k * d0 - d1 / 2)) : Rational(sign * d1 / 2 + d0 * four_k);
    s += q(c) * eta(2 * k + 1).val / pow(pi, 2 * k);
  }
  return s;
}

ExtReal cot_poly_rhs(const RationalPoly& p) {
  require(p.coeff(0) == 0, "cot_poly_rhs: requires P(0) = 0");
  const ExtReal pi = pi_ext();
  ExtReal s = q(2 * p(Rational(1))) / pi * ln2_ext();
  for (int k = 1; k <= p.degree() / 2; ++k) {
    const Rational inv4k(1, BigInt(1) << static_cast<unsigned>(2 * k));
    const Rational c = 2 * (derivative_at(p, 2 * k, 1) * (1 - inv4k) + derivative_at(p, 2 * k, 0)) * (k % 2 == 0 ? 1 : -1);
    s += q(c) * zeta(2 * k + 1).val / pow(pi, 2 * k + 1);
  }
  return s;
}

// ---- checks ----------------------------------------------------------------

IdentityReport sinlog_moment(int r) {
  require(r >= 2 && r <= 10, "sinlog_moment: r must lie in [2, 10]");
  // t = 2 pi s maps onto int_0^1 s^r log(2 sin(pi s)) ds
  const ExtReal inner = integral([r](const DoubleDouble& s) { return pow(s, r) * log(ldexp(sinpi(s), 1)); }, 0.0,
                                 1.0, SingularityHints::log_both());
  const ExtReal lhs = pow(ExtReal(2.0) * pi_ext(), r + 1) * inner;
  return make_report(IdentityId::kSinLogMoment, param_r(r), lhs, sinlog_rhs(r), kLogEndpointTol);
}

IdentityReport koyama_kurokawa_check(int r, const DoubleDouble& x) {
  require(r >= 2, "koyama_kurokawa_check: r must be >= 2");
  require(x > DoubleDouble(0.0) && x < dd_const::pi(), "koyama_kurokawa_check: x outside (0, pi)");
  const ExtReal lhs = integral([r](const DoubleDouble& t) { return pow(t, r - 2) * log(sin(t)); }, 0.0, x,
                               SingularityHints::log_left());
  const ExtReal rm1(static_cast<double>(r - 1));
  const ExtReal xe(x);
  const ExtReal log_sin_x(log(sin(x)), 16.0 * DoubleDouble::epsilon() * (1.0 + std::abs(log(sin(x)).hi())));
  const ExtReal y = ExtReal(x) / pi_ext();
  const ExtReal s = log_multisin(r, y.value).logValue;
  const ExtReal rhs = pow(xe, r - 1) / rm1 * log_sin_x - pow(pi_ext(), r - 1) / rm1 * s;
  return make_report(IdentityId::kKoyamaKurokawa, param_rx(r, x), lhs, rhs, kLogEndpointTol);
}

IdentityReport coslog_moment(int r) {
  require(r >= 0 && r <= 12, "coslog_moment: r must lie in [0, 12]");
  const ExtReal lhs = coslog_integral(r);
  const ExtReal rhs = coslog_rhs(r, resolved::kZetaESignShift);
  std::string notes;
  if (r >= 1) {
    const double literal = std::abs((lhs.value - coslog_rhs(r, 0).value).to_double());
    notes = "zeta_E sum taken with sign (-1)^{k-1}; the literal (-1)^k reading leaves residual " + fmt_sci(literal);
  }
  return make_report(IdentityId::kCosLogMoment, param_r(r), lhs, rhs, kSmoothTol, notes);
}

IdentityReport orr_integral_check(int r) {
  require(r >= 1 && r <= 8, "orr_integral_check: r must lie in [1, 8]");
  const ExtReal lhs = orr_integral(r);
  const ExtReal rhs = orr_rhs(r, resolved::kOrrDeltaInsideBracket);
  std::string notes = "interval [0, pi/2]; [0, 2pi] crosses the pole of cot at pi";
  if (r % 2 == 0) {
    const double outside = std::abs((lhs.value - orr_rhs(r, false).value).to_double());
    notes += "; delta term inside the (pi/2)^r bracket, outside leaves residual " + fmt_sci(outside);
  }
  return make_report(IdentityId::kOrrCotIntegral, param_r(r), lhs, rhs, kLogEndpointTol, notes);
}

namespace {
ExtReal euler_integral() {
  return integral([](const DoubleDouble& t) { return t * log(sin(t)); }, 0.0, dd_const::half_pi(),
                  SingularityHints::log_left());
}
}  // namespace

IdentityReport euler_lambda3_check() {
  const ExtReal I = euler_integral();
  const ExtReal lam = lambda_fn(3).val;
  const ExtReal pi2 = pi_ext() * pi_ext();
  const ExtReal kappa = (lam - ExtReal(2.0) * I) / ln2_ext();
  const ExtReal rhs = q(resolved::kEulerKappaPiSquaredFactor) * pi2 * ln2_ext() + ExtReal(2.0) * I;
  const double kappa_gap = std::abs((kappa.value - (q(resolved::kEulerKappaPiSquaredFactor) * pi2).value).to_double());
  std::string notes = "kappa = (lambda(3) - 2I)/log 2 = " + to_string(kappa.value, 20) + ", |kappa - pi^2/4| = " +
                      fmt_sci(kappa_gap) + "; I = " + to_string(I.value, 20);
  return make_report(IdentityId::kEulerLambda3, "", lam, rhs, kSmoothTol, notes);
}

IdentityReport hk_cos_integral_check(int r) {
  require(r >= 2 && r <= 12, "hk_cos_integral_check: r must lie in [2, 12]");
  const ExtReal lhs = halfcos_integral(r);
  IdentityReport rep = make_report(IdentityId::kHalfCosMoment, param_r(r), lhs, halfcos_rhs(r), kSmoothTol);
  // t -> pi t / 2 turns this into the log cos(pi t/4) moment of order r - 2
  const ExtReal rescaled = pow(ExtReal(2.0) / pi_ext(), r - 1) * lhs;
  const double gap = std::abs((rescaled.value - coslog_integral(r - 2).value).to_double());
  rep.notes = "rescaled against the log cos(pi t/4) moment: gap " + fmt_sci(gap);
  if (gap > 1e-12) rep.pass = false;
  return rep;
}

IdentityReport tan_moment_check(int r, const DoubleDouble& x) {
  const ExtReal lhs = tan_moment(r, x);
  const ExtReal rhs = -log_multicos_product(r + 1, x, kOracleTerms, true).logValue / pi_ext();
  return make_report(IdentityId::kTanMoment, param_rx(r, x), lhs, rhs, kSmoothTol, "rhs from the C_{r+1} product");
}

IdentityReport cot_moment_check(int r, const DoubleDouble& x) {
  const ExtReal lhs = cot_moment(r, x);
  const int s = r + resolved::kCotIndexShift;
  const ExtReal half_x = ExtReal(x) * ExtReal(0.5);
  const ExtReal rhs = ExtReal(std::ldexp(1.0, s)) / pi_ext() *
                      log_multisin_product(s, half_x.value, kOracleTerms, true).logValue;
  return make_report(IdentityId::kCotMoment, param_rx(r, x), lhs, rhs, kSmoothTol,
                     "(2^{r+1}/pi) log S_{r+1}(x/2) from the S product");
}

IdentityReport coslog_poly_check(const RationalPoly& p) {
  const ExtReal lhs = integral([&p](const DoubleDouble& t) { return p.eval(t) * log(cospi(ldexp(t, -2))); }, 0.0, 1.0);
  const ExtReal rhs = coslog_poly_rhs(p, resolved::kCosLogPolyIntegralLog2, true);
  return make_report(IdentityId::kCosLogPolynomial, "P=" + poly_string(p), lhs, rhs, kSmoothTol);
}

IdentityReport cot_poly_check(const RationalPoly& p) {
  const RationalPoly quotient = p.divide_by_t();
  const ExtReal lhs = integral(
      [&quotient](const DoubleDouble& t) {
        return quotient.eval(t) * z_cot_z(dd_const::half_pi() * t) / dd_const::half_pi();
      },
      0.0, 1.0, SingularityHints::pole_left());
  return make_report(IdentityId::kCotPolynomial, "P=" + poly_string(p), lhs, cot_poly_rhs(p), kSmoothTol);
}

IdentityReport multicos_quarter_check(int r) {
  const ExtReal lhs = log_multicos(r, 0.25).logValue;
  return make_report(IdentityId::kMultiCosQuarter, param_r(r), lhs, multicos_quarter_closed_form(r), 1e-12);
}

IdentityReport zeta3_corollary_check() {
  const ExtReal pi = pi_ext();
  const ExtReal c3 = log_multicos(3, 0.25).logValue;
  const ExtReal inner = ExtReal(4.0) * catalan().val / pi + ExtReal(16.0) * c3 - ln2_ext() * ExtReal(0.5);
  const ExtReal rhs = ExtReal(4.0) * pi * pi / ExtReal(21.0) * inner;
  return make_report(IdentityId::kZeta3Corollary, "", zeta(3).val, rhs, 1e-11);
}

// ---- resolution procedures -------------------------------------------------

Resolution resolve_orr_interval() {
  Resolution res;
  res.question = "interval and delta placement of the Orr cotangent integral, r = 1..8";
  res.tol = kLogEndpointTol;

  Candidate literal{"[0, 2pi] as displayed", std::numeric_limits<double>::infinity(), false, ""};
  try {
    QuadratureOptions o;
    o.tol = 1e-12;
    o.max_panels = 4096;
    o.hints = SingularityHints::pole_left();
    integrate([](const DoubleDouble& t) { return z_cot_z(t); }, 0.0, dd_const::two_pi(), o);
    literal.detail = "converged unexpectedly";
  } catch (const QuadratureError& e) {
    literal.detail = std::string("no finite value: ") + e.what();
  }
  res.candidates.push_back(literal);

  std::vector<std::pair<ExtReal, ExtReal>> outside, inside;
  for (int r = 1; r <= 8; ++r) {
    const ExtReal lhs = orr_integral(r);
    outside.emplace_back(lhs, orr_rhs(r, false));
    inside.emplace_back(lhs, orr_rhs(r, true));
  }
  res.candidates.push_back({"[0, pi/2], delta outside bracket", worst(outside), true, ""});
  res.candidates.push_back({"[0, pi/2], delta inside bracket", worst(inside), true, ""});
  pick_winner(res);
  return res;
}

Resolution resolve_euler_constant() {
  Resolution res;
  res.question = "constant term of Euler's lambda(3) formula";
  res.tol = kSmoothTol;
  const ExtReal I = euler_integral();
  const ExtReal lam = lambda_fn(3).val;
  const ExtReal pi2 = pi_ext() * pi_ext();
  const ExtReal kappa = (lam - ExtReal(2.0) * I) / ln2_ext();
  const std::string detail = "kappa = " + to_string(kappa.value, 20);
  res.candidates.push_back({"pi^2/log 2 (displayed)", worst({{lam, pi2 / ln2_ext() + ExtReal(2.0) * I}}), true, detail});
  res.candidates.push_back(
      {"(pi^2/4) log 2", worst({{lam, pi2 * ExtReal(0.25) * ln2_ext() + ExtReal(2.0) * I}}), true, detail});
  pick_winner(res);
  return res;
}

Resolution resolve_coslog_poly_terms() {
  Resolution res;
  res.question = "log 2 term and zeta_E coefficient of the polynomial log cos(pi t/4) moment";
  res.tol = kSmoothTol;
  std::vector<ExtReal> lhs;
  const auto polys = probe_polys();
  for (const auto& p : polys) {
    lhs.push_back(integral([&p](const DoubleDouble& t) { return p.eval(t) * log(cospi(ldexp(t, -2))); }, 0.0, 1.0));
  }
  for (bool from_integral : {false, true}) {
    for (bool resolved_zeta : {false, true}) {
      std::vector<std::pair<ExtReal, ExtReal>> pairs;
      for (std::size_t i = 0; i < polys.size(); ++i) {
        pairs.emplace_back(lhs[i], coslog_poly_rhs(polys[i], from_integral, resolved_zeta));
      }
      std::string name = from_integral ? "log2 coefficient -int_0^1 P" : "log2 coefficient -P(1)/(n+1) (displayed)";
      name += resolved_zeta ? ", zeta_E (-1)^k[4^k P'(0) - P'(1)/2]" : ", zeta_E (-1)^k P'(1)/2 + 4^k P'(0) (displayed)";
      res.candidates.push_back({name, worst(pairs), true, std::to_string(polys.size()) + " probe polynomials"});
    }
  }
  pick_winner(res);
  return res;
}

Resolution resolve_cot_index() {
  Resolution res;
  res.question = "S index of int_0^x t^r cot(pi t/2) dt, probes r in {1,2}, x in {0.5, 0.8}";
  res.tol = kSmoothTol;
  std::vector<std::pair<ExtReal, ExtReal>> displayed, proof;
  for (int r : {1, 2}) {
    for (double xv : {0.5, 0.8}) {
      const DoubleDouble x(xv);
      const ExtReal lhs = cot_moment(r, x);
      const DoubleDouble half = ldexp(x, -1);
      displayed.emplace_back(lhs, ExtReal(std::ldexp(1.0, r)) / pi_ext() *
                                      log_multisin_product(r, half, kOracleTerms, true).logValue);
      proof.emplace_back(lhs, ExtReal(std::ldexp(1.0, r + 1)) / pi_ext() *
                                  log_multisin_product(r + 1, half, kOracleTerms, true).logValue);
    }
  }
  res.candidates.push_back({"(2^r/pi) log S_r(x/2) (displayed)", worst(displayed), true, "S product oracle"});
  res.candidates.push_back({"(2^{r+1}/pi) log S_{r+1}(x/2)", worst(proof), true, "S product oracle"});
  pick_winner(res);
  return res;
}

Resolution resolve_zeta_e_sign() {
  Resolution res;
  res.question = "sign of the zeta_E sum in the log cos(pi t/4) moment, r = 0..12";
  res.tol = kSmoothTol;
  std::vector<std::pair<ExtReal, ExtReal>> literal, shifted;
  for (int r = 0; r <= 12; ++r) {
    const ExtReal lhs = coslog_integral(r);
    literal.emplace_back(lhs, coslog_rhs(r, 0));
    shifted.emplace_back(lhs, coslog_rhs(r, 1));
  }
  res.candidates.push_back({"(-1)^k (displayed)", worst(literal), true, ""});
  res.candidates.push_back({"(-1)^{k-1}", worst(shifted), true, ""});
  pick_winner(res);
  return res;
}

// ---- suites ----------------------------------------------------------------

std::vector<IdentityReport> identity_suite() {
  std::vector<IdentityReport> out;
  for (int r = 2; r <= 10; ++r) out.push_back(sinlog_moment(r));
  for (int r = 1; r <= 8; ++r) out.push_back(orr_integral_check(r));
  out.push_back(euler_lambda3_check());
  const DoubleDouble pi = dd_const::pi();
  out.push_back(koyama_kurokawa_check(2, ldexp(pi, -1)));
  out.push_back(koyama_kurokawa_check(3, ldexp(pi, -2)));
  out.push_back(koyama_kurokawa_check(4, 1.0));
  out.push_back(koyama_kurokawa_check(5, 2.5));
  for (int r = 2; r <= 12; ++r) out.push_back(multicos_quarter_check(r));
  out.push_back(zeta3_corollary_check());
  return out;
}

std::vector<IdentityReport> lemma_suite() {
  std::vector<IdentityReport> out;
  for (int r = 1; r <= 5; ++r) {
    for (double x : {0.1, 0.25, 0.4}) out.push_back(tan_moment_check(r, x));
  }
  for (int r = 2; r <= 12; ++r) out.push_back(hk_cos_integral_check(r));
  for (int r = 0; r <= 12; ++r) out.push_back(coslog_moment(r));
  for (const auto& p : probe_polys()) out.push_back(coslog_poly_check(p));
  for (int r = 1; r <= 4; ++r) {
    for (double x : {0.3, 0.5, 0.8}) out.push_back(cot_moment_check(r, x));
  }
  for (const auto& p : probe_polys()) out.push_back(cot_poly_check(p));
  return out;
}

std::vector<Resolution> resolution_suite() {
  return {resolve_orr_interval(), resolve_euler_constant(), resolve_coslog_poly_terms(), resolve_cot_index(),
          resolve_zeta_e_sign()};
}

}  // namespace multitrig
