// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Tolerances are pinned here and nowhere else.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "multitrig/approx.hpp"
#include "multitrig/dirichlet.hpp"
#include "multitrig/identities.hpp"
#include "multitrig/multifun.hpp"
#include "multitrig/quadrature.hpp"

using namespace multitrig;

namespace {

constexpr double kEq114Tol = 1e-12;
constexpr double kEq114Seconds = 10.0;
constexpr double kZeta3Tol = 1e-11;
constexpr double kSinLogTol = 1e-9;
constexpr double kLemma31Tol = 1e-10;
constexpr double kRescaleTol = 1e-12;
constexpr double kPolyLemmaTol = 1e-9;
constexpr int kPolyTrials = 200;
constexpr double kRouteSlack = 1e-8;
constexpr double kWinnerTol = 1e-9;
constexpr double kRejectFactor = 1e3;
constexpr double kKappaTol = 1e-10;
constexpr double kLadderSlack = 1.10;
// residual and bound are the same rounding quantity when the bound is attained
constexpr double kBoundRoundoff = 1e-12;
constexpr double kRecheckTol = 1e-20;
constexpr double kBasisSeconds = 60.0;
constexpr double kThm2Tol = 1e-12;
constexpr double kLinearityTol = 1e-18;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  [%d] %s  (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double d(const DoubleDouble& v) { return v.to_double(); }

RationalPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree), num(-40, 40), den(1, 9);
  std::vector<Rational> a(static_cast<std::size_t>(deg(rng) + 1));
  for (std::size_t k = 1; k < a.size(); ++k) a[k] = Rational(num(rng), den(rng));
  if (a.back() == 0) a.back() = 1;
  return RationalPoly(a);
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  bool ok = true;
  for (int r = 2; r <= 8; ++r) {
    const IdentityReport rep = multicos_quarter_check(r);
    worst = std::max(worst, rep.residual);
    ok = ok && rep.residual <= kEq114Tol;
  }
  const double t = seconds_since(t0);
  report(1, ok && t < kEq114Seconds, "log C_r(1/4) closed form, r = 2..8",
         "worst residual " + sci(worst) + " <= " + sci(kEq114Tol) + ", " + sci(t) + " s < 10 s");
}

void criterion2() {
  const IdentityReport rep = zeta3_corollary_check();
  report(2, rep.residual <= kZeta3Tol, "zeta(3) from C_3(1/4) and Catalan's constant",
         "residual " + sci(rep.residual) + " <= " + sci(kZeta3Tol));
}

void criterion3() {
  double worst = 0.0;
  for (int r = 2; r <= 6; ++r) worst = std::max(worst, sinlog_moment(r).residual);
  report(3, worst <= kSinLogTol, "log-sine moments vs odd zeta closed form, r = 2..6",
         "worst residual " + sci(worst) + " <= " + sci(kSinLogTol));
}

void criterion4() {
  double worst31 = 0.0, worst_hk = 0.0, worst_gap = 0.0;
  for (int r = 0; r <= 8; ++r) worst31 = std::max(worst31, coslog_moment(r).residual);
  const ExtReal two_over_pi = ExtReal(2.0) / pi_ext();
  for (int r = 2; r <= 8; ++r) {
    worst_hk = std::max(worst_hk, hk_cos_integral_check(r).residual);
    const ExtReal rescaled = pow(two_over_pi, r - 1) * halfcos_integral(r);
    worst_gap = std::max(worst_gap, std::abs(d(rescaled.value - coslog_integral(r - 2).value)));
  }
  report(4, worst31 <= kLemma31Tol && worst_hk <= kLemma31Tol && worst_gap <= kRescaleTol,
         "log cos(pi t/4) moments r = 0..8, log cos(t/2) moments r = 2..8, rescaling",
         "residuals " + sci(worst31) + ", " + sci(worst_hk) + " <= " + sci(kLemma31Tol) + "; rescale gap " +
             sci(worst_gap) + " <= " + sci(kRescaleTol));
}

void criterion5() {
  std::mt19937_64 rng(31415);
  int passed = 0;
  double worst = 0.0;
  for (int i = 0; i < kPolyTrials; ++i) {
    const RationalPoly p = random_poly(rng, 12);
    const IdentityReport a = coslog_poly_check(p), b = cot_poly_check(p);
    worst = std::max({worst, a.residual, b.residual});
    if (a.residual <= kPolyLemmaTol && b.residual <= kPolyLemmaTol) ++passed;
  }
  report(5, passed == kPolyTrials, "polynomial log-cos and cot lemmas on random P, P(0) = 0, degree <= 12",
         std::to_string(passed) + "/" + std::to_string(kPolyTrials) + ", worst residual " + sci(worst) +
             " <= " + sci(kPolyLemmaTol));
}

void criterion6() {
  bool ok = true;
  double worst_margin = -1.0;  // largest |diff| / allowance
  for (int r = 1; r <= 6; ++r) {
    for (const Rational& xq : {Rational(1, 10), Rational(1, 4), Rational(2, 5)}) {
      const DoubleDouble x = rational_to_dd(xq);
      const ExtReal via_moment = -pi_ext() * tan_moment(r, x);
      const MultiFunValue prod = log_multicos_product(r + 1, x);
      const double diff = std::abs(d(via_moment.value - prod.logValue.value));
      const double allowance = prod.truncation.tailBound + kRouteSlack;
      worst_margin = std::max(worst_margin, diff / allowance);
      ok = ok && diff <= allowance;
    }
  }
  report(6, ok, "log C_{r+1}(x) by tan moment vs truncated product, r = 1..6, x in {0.1, 0.25, 0.4}",
         "worst |diff| / (tail bound + 1e-8) = " + sci(worst_margin));
}

void criterion7() {
  bool ok = true;
  std::string detail;
  for (const Resolution& res : {resolve_orr_interval(), resolve_euler_constant(), resolve_coslog_poly_terms(),
                                resolve_cot_index()}) {
    double win = INFINITY, rejected = INFINITY;
    for (const Candidate& c : res.candidates) {
      const double v = c.finite ? c.residual : INFINITY;
      if (c.reading == res.winner) {
        win = v;
      } else {
        rejected = std::min(rejected, v);
      }
    }
    const bool this_ok = res.unique && win <= kWinnerTol && rejected >= kRejectFactor * win;
    ok = ok && this_ok;
    detail += (detail.empty() ? "" : "; ") + std::string(this_ok ? "" : "FAILED ") + sci(win) + " vs " +
              (std::isfinite(rejected) ? sci(rejected) : std::string("non-finite"));
  }
  // kappa - pi^2/4 = (lambda(3) - rhs)/log 2 at the winning reading
  const Resolution euler = resolve_euler_constant();
  double kappa_gap = INFINITY;
  for (const Candidate& c : euler.candidates) {
    if (c.reading == euler.winner) kappa_gap = c.residual / d(ln2_ext().value);
  }
  ok = ok && kappa_gap <= kKappaTol;
  report(7, ok, "resolution procedures: unique winners, rejected readings >= 1e3 x worse",
         detail + "; |kappa - pi^2/4| = " + sci(kappa_gap));
}

ApproxTarget make_target(Basis basis, int q, int n) {
  ApproxTarget t;
  t.alpha = ExtReal(sqrt(DoubleDouble(2.0)), 4.0 * DoubleDouble::epsilon() * 1.5);
  t.alphaText = "sqrt(2)";
  t.basis = basis;
  t.x = basis == Basis::kMultiSin ? Rational(1, 2) : Rational(1, 4);
  t.k0 = 1;
  t.q = q;
  t.n = n;
  return t;
}

void criterion8() {
  bool ok = true;
  std::string detail;
  double sqrt2_ratio = 0.0;
  for (Basis basis : {Basis::kMultiCos, Basis::kMultiSin, Basis::kLupuWu}) {
    const auto t0 = std::chrono::steady_clock::now();
    bool basis_ok = true;
    for (int q : {1, 2}) {
      double prev = INFINITY, first = 0.0, last = 0.0;
      for (int n : {8, 16, 32, 64}) {
        const ApproxCertificate cert = certify(make_target(basis, q, n));
        const double bound = cert.fittedK / std::pow(static_cast<double>(n), q);
        const CertificateCheck chk = recheck_certificate(certificate_to_json(cert));
        const bool step = cert.pass && cert.residual <= kLadderSlack * prev &&
                          cert.residual <= bound * (1.0 + kBoundRoundoff) + cert.evaluationError && chk.coefficientsMatch &&
                          std::abs(chk.recomputedResidual - cert.residual) <= kRecheckTol;
        if (!step) {
          detail += std::string(basis_name(basis)) + " q=" + std::to_string(q) + " n=" + std::to_string(n) +
                    " residual " + sci(cert.residual) + " bound " + sci(bound) + (cert.pass ? "" : " " + cert.failure) +
                    "; ";
        }
        basis_ok = basis_ok && step;
        prev = cert.residual;
        if (n == 8) first = cert.residual;
        last = cert.residual;
      }
      if (basis == Basis::kMultiCos && q == 2) sqrt2_ratio = std::cbrt(first / last);
    }
    const double t = seconds_since(t0);
    if (t >= kBasisSeconds) detail += std::string(basis_name(basis)) + " took " + sci(t) + " s; ";
    ok = ok && basis_ok && t < kBasisSeconds;
  }
  report(8, ok, "sqrt(2) certificates, multicos/multisin/lupuWu, q in {1, 2}, n = 8..64",
         detail + "ladder nonincreasing within 10%, residual <= fittedK/n^q + evaluation error, recheck to 1e-20" +
             "; info: multicos q=2 mean ratio per doubling " + sci(sqrt2_ratio));
}

// Monomial-wise assembly of int_0^1 P(t) log cos(pi t/4) dt from the single
// moment formula, keyed by (family, k).
std::map<std::pair<Family, int>, Rational> monomial_assembly(const RationalPoly& p) {
  std::map<std::pair<Family, int>, Rational> out;
  for (int m = 1; m <= p.degree(); ++m) {
    const Rational a = p.coeff(m);
    if (a == 0) continue;
    out[{Family::kLog2, 0}] -= a / (m + 1);
    for (int k = 0; 2 * k <= m; ++k) {
      const Rational c = Rational(factorial(2 * k) * binomial(m, 2 * k)) * Rational(BigInt(1) << (2 * k + 1)) * a;
      out[{Family::kBeta, k}] += k % 2 == 0 ? c : Rational(-c);
    }
    for (int k = 1; 2 * k - 1 <= m; ++k) {
      const Rational c = Rational(factorial(2 * k - 1) * binomial(m, 2 * k - 1)) * a / 2;
      out[{Family::kZetaE, k}] += k % 2 == 1 ? c : Rational(-c);
    }
    if (m % 2 == 1) {  // the eta(m + 2) term, sin(pi m/2) = (-1)^{(m-1)/2}
      const int k = (m + 1) / 2;
      const Rational c = Rational(factorial(m)) * Rational(BigInt(1) << (m + 1)) * a;
      out[{Family::kZetaE, k}] -= ((m - 1) / 2) % 2 == 0 ? c : Rational(-c);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void criterion9() {
  ApproxTarget t = make_target(Basis::kZetaBeta, 1, 16);
  const ApproxCertificate cert = certify(t);
  const RationalPoly& p = cert.weightedPoly;
  const auto expected = monomial_assembly(p);
  std::map<std::pair<Family, int>, Rational> got;
  for (const BasisTerm& term : cert.coefficients) got[{term.family, term.k}] = term.c;
  const bool exact = got == expected;

  // and both against quadrature on the emitted P_n
  ExtReal assembled = 0.0;
  for (const BasisTerm& term : cert.coefficients) assembled += rational_to_ext(term.c) * basis_value(term, Rational(1));
  const ExtReal quad =
      integrate([&p](const DoubleDouble& s) { return p.eval(s) * log(cospi(ldexp(s, -2))); }, 0.0, 1.0, 1e-28).value;
  const double gap = std::abs(d(assembled.value - quad.value));
  report(9, cert.pass && exact && gap <= kThm2Tol, "zeta/beta certificate, coefficients vs monomial assembly",
         std::to_string(got.size()) + " terms " + (exact ? "identical" : "DIFFER") + "; assembly vs quadrature " +
             sci(gap) + " <= " + sci(kThm2Tol) + "; residual " + sci(cert.residual));
}

void criterion10() {
  std::mt19937_64 rng(2718);
  std::vector<std::string> broken;

  // quadrature exactness on one panel for degree <= 39
  double worst_quad = 0.0;
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<int> deg(0, 2 * kGaussNodes - 1), num(-50, 50);
    std::vector<Rational> a(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& c : a) c = Rational(num(rng), 8);
    const RationalPoly p(a);
    QuadratureOptions o;
    o.tol = 1e-300;
    o.max_panels = 1;
    QuadratureResult r;
    try {
      r = integrate([&p](const DoubleDouble& s) { return p.eval(s); }, 0.0, 1.0, o);
    } catch (const QuadratureError& e) {
      r = e.partial();
    }
    double scale = 0.0;
    for (const auto& c : a) scale += std::abs(c.get_d());
    worst_quad = std::max(worst_quad, std::abs(d(r.value.value - rational_to_dd(p.integral01()))) / scale);
  }
  if (worst_quad > 10.0 * DoubleDouble::epsilon()) broken.push_back("quadrature exactness " + sci(worst_quad));

  // functional linearity
  double worst_lin = 0.0;
  for (Basis basis : {Basis::kMultiCos, Basis::kZetaBeta, Basis::kMultiSin, Basis::kLupuWu}) {
    for (int i = 0; i < 3; ++i) {
      const RationalPoly f = random_poly(rng, 6), g = random_poly(rng, 6);
      const Rational c(7, 3);
      auto F = [&](const RationalPoly& h) {
        return functional_value([&h](const DoubleDouble& s) { return h.eval(s); }, basis, Rational(1, 4), 1);
      };
      const ExtReal lhs = F(f + c * g), rhs = F(f) + rational_to_ext(c) * F(g);
      worst_lin = std::max(worst_lin, std::abs(d(lhs.value - rhs.value)) / std::max(1.0, std::abs(d(lhs.value))));
    }
  }
  if (worst_lin > kLinearityTol) broken.push_back("linearity " + sci(worst_lin));

  // endpoint vanishing derivatives, exact
  int vanish_bad = 0;
  for (int i = 0; i < 40; ++i) {
    const int k0 = 1 + i % 3;
    std::vector<Rational> s(static_cast<std::size_t>(1 + i % 7));
    for (auto& c : s) c = Rational(static_cast<long>(rng() % 201) - 100, 1 + static_cast<long>(rng() % 13));
    const RationalPoly pn = build_Pn(RationalPoly(s), k0);
    for (int j = 0; j < 2 * k0; ++j) {
      if (derivative_at(pn, j, 0) != 0 || derivative_at(pn, j, 1) != 0) ++vanish_bad;
    }
  }
  if (vanish_bad != 0) broken.push_back(std::to_string(vanish_bad) + " nonvanishing endpoint derivatives");

  // Dirichlet relation web
  int web_bad = 0;
  for (int s = 2; s <= 40; ++s) {
    const ExtReal z = zeta(s).val, e = eta(s).val, l = lambda_fn(s).val;
    const ExtReal f_eta = ExtReal(1.0) - ExtReal(std::ldexp(1.0, 1 - s));
    const ExtReal f_lam = ExtReal(1.0) - ExtReal(std::ldexp(1.0, -s));
    if (!consistent(e, f_eta * z)) ++web_bad;
    if (!consistent(l, f_lam * z)) ++web_bad;
    if (!consistent(l, (z + e) * ExtReal(0.5))) ++web_bad;
  }
  if (web_bad != 0) broken.push_back(std::to_string(web_bad) + " relation web violations");

  // determinism
  const std::string c1 = certificate_to_json(certify(make_target(Basis::kMultiSin, 2, 16)));
  const std::string c2 = certificate_to_json(certify(make_target(Basis::kMultiSin, 2, 16)));
  auto suite_text = [] {
    std::string s;
    for (const IdentityReport& r : identity_suite()) s += to_string(r.lhs.value, 32) + to_string(r.rhs.value, 32);
    return s;
  };
  if (c1 != c2 || suite_text() != suite_text()) broken.push_back("reruns differ");

  std::string detail = "quadrature " + sci(worst_quad) + ", linearity " + sci(worst_lin) +
                       ", vanishing exact, relation web s = 2..40, byte-identical reruns";
  for (const auto& b : broken) detail += "; BROKEN " + b;
  report(10, broken.empty(), "property suites", detail);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("FAIL  criterion raised: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d/10 criteria passed in %.1f s\n", 10 - failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
