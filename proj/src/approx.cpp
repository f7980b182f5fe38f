#include "multitrig/approx.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "json.hpp"
#include "multitrig/dirichlet.hpp"
#include "multitrig/identities.hpp"
#include "multitrig/multifun.hpp"
#include "multitrig/quadrature.hpp"

namespace multitrig {

namespace {

using nlohmann::json;

constexpr int kValueDigits = 32;

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

Rational pow2(int e) {
  Rational r(BigInt(1) << static_cast<unsigned>(std::abs(e)));
  return e >= 0 ? r : Rational(1) / r;
}

DoubleDouble weight_over_t(const DoubleDouble& t, int k0) {
  return pow(t, 2 * k0 - 1) * pow(DoubleDouble(1.0) - t, 2 * k0);
}

std::string value_string(const DoubleDouble& v) { return to_string(v, kValueDigits, true); }

// Resolution procedures are run at most once per process; certificates record
// the winning readings.
struct ResolvedReadings {
  std::string cotIndex, log2Term, zetaESign;
  int cotShift = -1;
};

const ResolvedReadings& resolved_readings(Basis basis) {
  static std::once_flag cot_once, cos_once;
  static ResolvedReadings r;
  if (basis == Basis::kMultiSin) {
    std::call_once(cot_once, [] {
      const Resolution res = resolve_cot_index();
      if (res.unique) {
        r.cotIndex = res.winner;
        r.cotShift = res.winner.find("S_{r+1}") != std::string::npos ? 1 : 0;
      }
    });
    if (r.cotShift != resolved::kCotIndexShift) {
      throw ApproxError("coefficients_thm3", "unresolved index: the cotangent-moment resolution did not confirm the encoded reading");
    }
  }
  if (basis == Basis::kZetaBeta) {
    std::call_once(cos_once, [] {
      const Resolution terms = resolve_coslog_poly_terms();
      const Resolution sign = resolve_zeta_e_sign();
      if (terms.unique) r.log2Term = terms.winner;
      if (sign.unique) r.zetaESign = sign.winner;
    });
    if (r.log2Term.empty() || r.zetaESign.empty()) {
      throw ApproxError("coefficients_thm2", "unresolved log cos polynomial moment reading");
    }
  }
  return r;
}

}  // namespace

const char* basis_name(Basis basis) {
  switch (basis) {
    case Basis::kMultiCos:
      return "multicos";
    case Basis::kZetaBeta:
      return "zetaBeta";
    case Basis::kMultiSin:
      return "multisin";
    case Basis::kLupuWu:
      return "lupuWu";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  for (Basis b : {Basis::kMultiCos, Basis::kZetaBeta, Basis::kMultiSin, Basis::kLupuWu}) {
    if (name == basis_name(b)) return b;
  }
  throw std::invalid_argument("unknown basis '" + name + "' (multicos, zetaBeta, multisin, lupuWu)");
}

const char* profile_name(Profile profile) { return profile == Profile::kConstant ? "constant" : "bump"; }

Profile parse_profile(const std::string& name) {
  if (name == "constant") return Profile::kConstant;
  if (name == "bump") return Profile::kBump;
  throw std::invalid_argument("unknown profile '" + name + "' (constant, bump)");
}

void validate(const ApproxTarget& t) {
  if (t.n < 3) throw ApproxError("target", "n must be >= 3");
  if (t.k0 < 1) throw ApproxError("target", "k0 must be >= 1");
  if (t.q < 1) throw ApproxError("target", "q must be >= 1");
  if (t.basis == Basis::kMultiCos && !(t.x > 0 && t.x < Rational(1, 2))) {
    throw ApproxError("target", "multicos needs 0 < x < 1/2");
  }
  if (t.basis == Basis::kMultiSin && !(t.x > 0 && t.x < 1)) throw ApproxError("target", "multisin needs 0 < x < 1");
}

Rational domain_end(Basis basis, const Rational& x) {
  return basis == Basis::kMultiCos || basis == Basis::kMultiSin ? x : Rational(1);
}

ExtReal functional_value(const SmoothFn& f, Basis basis, const Rational& x, int k0) {
  if (k0 < 1) throw ApproxError("functional_value", "k0 must be >= 1");
  const Rational end = domain_end(basis, x);
  if (end < 0 || (basis == Basis::kMultiCos && end >= Rational(1, 2)) || end > 1) {
    throw DomainError("functional_value: x outside the basis domain");
  }
  const DoubleDouble b = rational_to_dd(end);
  Integrand g;
  switch (basis) {
    case Basis::kMultiCos:
      g = [&f, k0](const DoubleDouble& t) { return f(t) * weight_over_t(t, k0) * t * tanpi(t); };
      break;
    case Basis::kZetaBeta:
      g = [&f, k0](const DoubleDouble& t) { return f(t) * weight_over_t(t, k0) * t * log(cospi(ldexp(t, -2))); };
      break;
    case Basis::kMultiSin:
    case Basis::kLupuWu:
      // w cot(pi t/2) = (w/t) (2/pi) z cot z, z = pi t/2
      g = [&f, k0](const DoubleDouble& t) {
        return f(t) * weight_over_t(t, k0) * z_cot_z(dd_const::half_pi() * t) / dd_const::half_pi();
      };
      break;
  }
  if (!(DoubleDouble(0.0) < b)) return ExtReal(0.0);
  try {
    return integrate(g, 0.0, b, kFunctionalTol).value;
  } catch (const QuadratureError& e) {
    throw ApproxError("functional_value", e.what());
  }
}

DoubleDouble bump_profile(const DoubleDouble& t, const DoubleDouble& end) {
  const DoubleDouble c = ldexp(end, -1), d = ldexp(end, -3);
  const DoubleDouble s = (ldexp(d, 1) - abs(t - c)) / d;
  if (!(s > DoubleDouble(0.0))) return 0.0;
  if (!(s < DoubleDouble(1.0))) return 1.0;
  const DoubleDouble a = exp(DoubleDouble(-1.0) / s), b = exp(DoubleDouble(-1.0) / (DoubleDouble(1.0) - s));
  return a / (a + b);
}

AlphaFunction construct_f_alpha(const ExtReal& alpha, Basis basis, const Rational& x, int k0, Profile profile) {
  AlphaFunction out;
  if (alpha.value == DoubleDouble(0.0)) {
    out.f = [](const DoubleDouble&) { return DoubleDouble(0.0); };
    out.scale = 0.0;
    return out;
  }
  const DoubleDouble end = rational_to_dd(domain_end(basis, x));
  SmoothFn g;
  if (profile == Profile::kConstant) {
    g = [](const DoubleDouble&) { return DoubleDouble(1.0); };
  } else {
    g = [end](const DoubleDouble& t) { return bump_profile(t, end); };
  }
  out.profileFunctional = functional_value(g, basis, x, k0);
  // every kernel keeps one sign on its range, so F(g) = 0 cannot happen
  if (out.profileFunctional.value == DoubleDouble(0.0) ||
      abs(out.profileFunctional.value).hi() <= out.profileFunctional.err) {
    throw ApproxError("construct_f_alpha", "degenerate profile: functional of g vanishes");
  }
  out.scale = alpha.value / out.profileFunctional.value;
  const DoubleDouble scale = out.scale;
  out.f = [g, scale](const DoubleDouble& t) { return scale * g(t); };
  return out;
}

BigInt default_denominator(int n, int q) {
  BigInt ten, nq;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(q + 6));
  mpz_ui_pow_ui(nq.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(q));
  return ten * nq;
}

SmoothApprox approximate_smooth(const SmoothFn& f, const Rational& end, int n, int q, const BigInt& denominator,
                                bool strict) {
  if (n < 1) throw ApproxError("approximate_smooth", "n must be >= 1");
  if (!(end > 0)) throw ApproxError("approximate_smooth", "empty domain");
  if (denominator < 1) throw ApproxError("approximate_smooth", "denominator bound must be >= 1");
  const int nodes = n + 1;
  const DoubleDouble b = rational_to_dd(end);

  std::vector<DoubleDouble> fv(static_cast<std::size_t>(nodes));
  double sup_f = 0.0;
  for (int j = 0; j < nodes; ++j) {
    // t_j = b (1 + cos(pi (2j+1) / (2N))) / 2
    const DoubleDouble u = cospi(DoubleDouble(2 * j + 1) / DoubleDouble(2 * nodes));
    fv[static_cast<std::size_t>(j)] = f(ldexp(b * (DoubleDouble(1.0) + u), -1));
    if (!std::isfinite(fv[static_cast<std::size_t>(j)].hi())) {
      throw ApproxError("approximate_smooth", "non-finite sample");
    }
    sup_f = std::max(sup_f, std::abs(fv[static_cast<std::size_t>(j)].hi()));
  }

  std::vector<DoubleDouble> c(static_cast<std::size_t>(nodes));
  double c_max = 0.0;
  for (int k = 0; k < nodes; ++k) {
    DoubleDouble s = 0.0;
    for (int j = 0; j < nodes; ++j) {
      // cos(pi k (2j+1) / (2N)) with the argument reduced mod 2 exactly
      const long m = (static_cast<long>(k) * (2 * j + 1)) % (4L * nodes);
      s += fv[static_cast<std::size_t>(j)] * cospi(DoubleDouble(static_cast<double>(m)) / DoubleDouble(2 * nodes));
    }
    s = s * DoubleDouble(2.0) / DoubleDouble(nodes);
    if (k == 0) s = ldexp(s, -1);
    c[static_cast<std::size_t>(k)] = s;
    c_max = std::max(c_max, std::abs(s.hi()));
  }

  SmoothApprox out;
  const double noise = 1e3 * DoubleDouble::epsilon() * std::max(c_max, sup_f);
  int last = -1;
  for (int k = 0; k < nodes; ++k) {
    if (std::abs(c[static_cast<std::size_t>(k)].hi()) > noise) last = k;
  }
  double chopped = 0.0;
  for (int k = last + 1; k < nodes; ++k) chopped += std::abs(c[static_cast<std::size_t>(k)].hi());
  double aliased = 0.0;
  if (nodes >= 3) {
    aliased = 2.0 * (std::abs(c[static_cast<std::size_t>(nodes - 1)].hi()) +
                     std::abs(c[static_cast<std::size_t>(nodes - 2)].hi()));
  }
  // a posteriori: the aliasing estimate is optimistic while the coefficients
  // still decay slowly, so also measure f - p on a grid 8x denser than the
  // nodes and double it for the gaps
  double measured = 0.0;
  const int checks = 8 * nodes;
  for (int i = 0; i <= checks; ++i) {
    const DoubleDouble t = b * DoubleDouble(i) / DoubleDouble(checks);
    const DoubleDouble u = ldexp(t / b, 1) - DoubleDouble(1.0);
    DoubleDouble b1 = 0.0, b2 = 0.0;
    for (int k = last; k >= 1; --k) {
      const DoubleDouble b0 = ldexp(u * b1, 1) - b2 + c[static_cast<std::size_t>(k)];
      b2 = b1;
      b1 = b0;
    }
    const DoubleDouble p = last >= 0 ? u * b1 - b2 + c[0] : DoubleDouble(0.0);
    measured = std::max(measured, std::abs((f(t) - p).hi()));
  }
  out.interpolationBound =
      std::max(chopped + aliased, 2.0 * measured) + nodes * DoubleDouble::epsilon() * std::max(c_max, sup_f);

  // exact sum_k c_k T_k(2t/end - 1)
  const RationalPoly u(std::vector<Rational>{Rational(-1), Rational(2) / end});
  RationalPoly t_prev(std::vector<Rational>{Rational(1)}), t_cur = u;
  RationalPoly s;
  for (int k = 0; k <= last; ++k) {
    const RationalPoly& tk = k == 0 ? t_prev : t_cur;
    s = s + dd_to_rational(c[static_cast<std::size_t>(k)]) * tk;
    if (k >= 1) {
      RationalPoly next = Rational(2) * (u * t_cur) - t_prev;
      t_prev = std::move(t_cur);
      t_cur = std::move(next);
    }
  }

  std::vector<Rational> rounded;
  Rational rounding = 0, end_pow = 1;
  for (const Rational& a : s.coeffs()) {
    Rational r = round_to_denominator(a, denominator);
    const Rational snap = best_rational(a, denominator);
    if (abs(snap - a) <= Rational(1e3 * DoubleDouble::epsilon()) * abs(a)) r = snap;
    rounding += abs(r - a) * end_pow;
    end_pow *= end;
    rounded.push_back(std::move(r));
  }
  out.poly = RationalPoly(std::move(rounded));
  out.roundingBound = Rational(rounding).get_d();

  if (strict && out.bound() > sup_f / std::pow(static_cast<double>(n), q)) {
    throw ApproxBudgetError("q = " + std::to_string(q) + " unreachable at degree " + std::to_string(n) +
                                "; achieved sup-norm bound " + to_string(DoubleDouble(out.bound()), 3, true),
                            out.bound());
  }
  return out;
}

RationalPoly build_Pn(const RationalPoly& s, int k0) {
  if (k0 < 1) throw ApproxError("build_Pn", "k0 must be >= 1");
  RationalPoly p = weight_poly(k0) * s;
  for (int j = 0; j < 2 * k0; ++j) {
    if (derivative_at(p, j, 0) != 0 || derivative_at(p, j, 1) != 0) {
      throw std::logic_error("build_Pn: weight factor lost its vanishing derivatives");
    }
  }
  return p;
}

const char* family_name(Family family) {
  switch (family) {
    case Family::kMultiCos:
      return "multicos";
    case Family::kMultiSin:
      return "multisin";
    case Family::kBeta:
      return "beta";
    case Family::kZetaE:
      return "zetaE";
    case Family::kLog2:
      return "log2";
    case Family::kZeta:
      return "zeta";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::kMultiCos, Family::kMultiSin, Family::kBeta, Family::kZetaE, Family::kLog2, Family::kZeta}) {
    if (name == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown basis family '" + name + "'");
}

std::string BasisTerm::element() const {
  const std::string k1 = std::to_string(k + 1);
  switch (family) {
    case Family::kMultiCos:
      return "log C_" + k1 + "(x)/pi";
    case Family::kMultiSin:
      return "log S_" + k1 + "(x/2)/pi";
    case Family::kBeta:
      return "beta(" + std::to_string(2 * k + 2) + ")/pi^" + std::to_string(2 * k + 1);
    case Family::kZetaE:
      return "zeta_E(" + std::to_string(2 * k + 1) + ")/pi^" + std::to_string(2 * k);
    case Family::kLog2:
      return "log 2";
    case Family::kZeta:
      return "zeta(" + std::to_string(2 * k + 1) + ")/pi^" + std::to_string(2 * k + 1);
  }
  return "?";
}

std::vector<BasisTerm> coefficients_thm1(const RationalPoly& p) {
  std::vector<BasisTerm> out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) != 0) out.push_back({Family::kMultiCos, k, -p.coeff(k)});
  }
  return out;
}

Thm2Coefficients coefficients_thm2(const RationalPoly& p, int k0) {
  if (p.coeff(0) != 0) throw ApproxError("coefficients_thm2", "precondition P(0) = 0 violated");
  Thm2Coefficients out;
  const int d = p.degree();
  for (int k = 0; 2 * k <= d; ++k) {
    const Rational c = sign_pow(k) * derivative_at(p, 2 * k, 1) * pow2(2 * k + 1);
    if (c == 0) continue;
    if (k < k0) throw ApproxError("coefficients_thm2", "beta coefficient below k0 does not vanish");
    out.beta.push_back({Family::kBeta, k, c});
  }
  for (int k = 1; 2 * k - 1 <= d; ++k) {
    const Rational c =
        sign_pow(k) * (pow2(2 * k) * derivative_at(p, 2 * k - 1, 0) - derivative_at(p, 2 * k - 1, 1) / 2);
    if (c == 0) continue;
    if (k < k0) throw ApproxError("coefficients_thm2", "zeta_E coefficient below k0 does not vanish");
    out.zetaE.push_back({Family::kZetaE, k, c});
  }
  out.log2Term = -p.integral01();
  return out;
}

std::vector<BasisTerm> coefficients_thm3(const RationalPoly& p, int index_shift) {
  if (index_shift != 0 && index_shift != 1) {
    throw ApproxError("coefficients_thm3", "unresolved index: shift must be 0 or 1");
  }
  std::vector<BasisTerm> out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) != 0) out.push_back({Family::kMultiSin, k, pow2(k + index_shift) * p.coeff(k)});
  }
  return out;
}

std::vector<BasisTerm> coefficients_thm4(const RationalPoly& p, int k0) {
  if (p.coeff(0) != 0) throw ApproxError("coefficients_thm4", "precondition P(0) = 0 violated");
  if (p(Rational(1)) != 0) throw ApproxError("coefficients_thm4", "precondition P(1) = 0 violated (log 2 term)");
  std::vector<BasisTerm> out;
  for (int k = 1; 2 * k <= p.degree(); ++k) {
    const Rational c =
        sign_pow(k) * 2 * (derivative_at(p, 2 * k, 1) * (1 - pow2(-2 * k)) + derivative_at(p, 2 * k, 0));
    if (c == 0) continue;
    if (k < k0) throw ApproxError("coefficients_thm4", "coefficient below k0 does not vanish");
    out.push_back({Family::kZeta, k, c});
  }
  return out;
}

ExtReal basis_value(const BasisTerm& term, const Rational& x) {
  const ExtReal pi = pi_ext();
  const int k = term.k;
  switch (term.family) {
    case Family::kMultiCos:
      return log_multicos(k + 1, rational_to_dd(x)).logValue / pi;
    case Family::kMultiSin:
      return log_multisin(k + 1, rational_to_dd(x / 2)).logValue / pi;
    case Family::kBeta:
      return beta_fn(2 * k + 2).val / pow(pi, 2 * k + 1);
    case Family::kZetaE:
      return eta(2 * k + 1).val / pow(pi, 2 * k);
    case Family::kLog2:
      return ln2_ext();
    case Family::kZeta:
      return zeta(2 * k + 1).val / pow(pi, 2 * k + 1);
  }
  return ExtReal(0.0);
}

double certificate_residual(const std::string& alpha, const std::vector<BasisTerm>& terms,
                            const std::vector<std::string>& values, bool include_log2) {
  if (terms.size() != values.size()) throw std::invalid_argument("certificate_residual: size mismatch");
  Rational r = dd_to_rational(parse_dd(alpha));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!include_log2 && terms[i].family == Family::kLog2) continue;
    r -= terms[i].c * dd_to_rational(parse_dd(values[i]));
  }
  return Rational(abs(r)).get_d();
}

namespace {

std::vector<BasisTerm> theorem_coefficients(Basis basis, const RationalPoly& p, int k0) {
  switch (basis) {
    case Basis::kMultiCos:
      return coefficients_thm1(p);
    case Basis::kZetaBeta: {
      Thm2Coefficients c = coefficients_thm2(p, k0);
      std::vector<BasisTerm> out = std::move(c.beta);
      out.insert(out.end(), c.zetaE.begin(), c.zetaE.end());
      if (c.log2Term != 0) out.push_back({Family::kLog2, 0, c.log2Term});
      return out;
    }
    case Basis::kMultiSin:
      return coefficients_thm3(p, resolved::kCotIndexShift);
    case Basis::kLupuWu:
      return coefficients_thm4(p, k0);
  }
  return {};
}

// one rung of the ladder; mass = int w |kernel|
void run_pipeline(ApproxCertificate& cert, const AlphaFunction& fa, double mass) {
  const ApproxTarget& t = cert.target;
  const Rational end = domain_end(t.basis, t.x);
  const SmoothApprox sa = approximate_smooth(fa.f, end, t.n, t.q, cert.denominator);
  cert.smoothPoly = sa.poly;
  cert.approxBound = sa.bound();
  cert.weightedPoly = build_Pn(sa.poly, t.k0);
  cert.coefficients = theorem_coefficients(t.basis, cert.weightedPoly, t.k0);
  cert.basisValues.clear();
  double value_err = 0.0;
  for (const BasisTerm& term : cert.coefficients) {
    try {
      const ExtReal v = basis_value(term, t.x);
      cert.basisValues.push_back(value_string(v.value));
      // the decimal string adds at most one unit in the 32nd digit
      value_err += std::abs(term.c.get_d()) * (v.err + 1e-31 * std::abs(v.value.hi()));
    } catch (const QuadratureError& e) {
      throw ApproxError("basis_value", term.element() + ": " + e.what());
    }
  }
  const double alpha_abs = std::abs(t.alpha.value.hi());
  double functional_err = 0.0;
  if (fa.profileFunctional.value != DoubleDouble(0.0)) {
    functional_err = alpha_abs * fa.profileFunctional.err / std::abs(fa.profileFunctional.value.hi());
  }
  cert.approximationError = mass * cert.approxBound + functional_err;
  cert.evaluationError = value_err + t.alpha.err + 1e-31 * alpha_abs;
  cert.alphaValue = value_string(t.alpha.value);
  cert.residual = certificate_residual(cert.alphaValue, cert.coefficients, cert.basisValues);
  cert.residualWithoutLog2 =
      t.basis == Basis::kZetaBeta ? certificate_residual(cert.alphaValue, cert.coefficients, cert.basisValues, false)
                                  : cert.residual;
}

}  // namespace

ApproxCertificate certify(const ApproxTarget& target, Profile profile, std::optional<BigInt> denominator) {
  ApproxCertificate cert;
  cert.target = target;
  cert.profile = profile;
  cert.alphaValue = value_string(target.alpha.value);
  cert.resolutions = {
      {"orrInterval", "[0, pi/2], delta inside bracket"},
      {"eulerConstant", "kappa = pi^2/4"},
  };
  try {
    validate(target);
    if (target.basis == Basis::kMultiSin) {
      cert.resolutions.emplace_back("cotIndex", resolved_readings(target.basis).cotIndex);
    }
    if (target.basis == Basis::kZetaBeta) {
      const ResolvedReadings& r = resolved_readings(target.basis);
      cert.resolutions.emplace_back("coslogPolyTerms", r.log2Term);
      cert.resolutions.emplace_back("zetaESign", r.zetaESign);
    }
    const AlphaFunction fa = construct_f_alpha(target.alpha, target.basis, target.x, target.k0, profile);
    const ExtReal mass_ext =
        functional_value([](const DoubleDouble&) { return DoubleDouble(1.0); }, target.basis, target.x, target.k0);
    const double mass = std::abs(mass_ext.value.hi()) + mass_ext.err;

    std::vector<int> rungs{std::max(3, target.n / 4), std::max(3, target.n / 2), target.n};
    rungs.erase(std::unique(rungs.begin(), rungs.end()), rungs.end());
    for (int n : rungs) {
      ApproxCertificate rung = cert;
      rung.target.n = n;
      rung.denominator = denominator ? *denominator : default_denominator(n, target.q);
      run_pipeline(rung, fa, mass);
      cert.ladder.push_back({n, rung.residual, rung.approximationError, rung.evaluationError});
      cert.fittedK = std::max(cert.fittedK, rung.approximationError * std::pow(static_cast<double>(n), target.q));
      if (n == target.n) {
        rung.ladder = cert.ladder;
        rung.fittedK = cert.fittedK;
        cert = std::move(rung);
      }
    }
    const double bound = cert.fittedK / std::pow(static_cast<double>(target.n), target.q);
    auto sci = [](double v) { return to_string(DoubleDouble(v), 3, true); };
    // evaluation noise below the 1e-20 reproduction scale never disqualifies
    const double noise_floor = 1e-20 * std::max(1.0, std::abs(target.alpha.value.hi()));
    if (!(cert.evaluationError <= std::max(bound, noise_floor))) {
      cert.failure = "ill-conditioned: basis evaluation error " + sci(cert.evaluationError) +
                     " exceeds fittedK/n^q = " + sci(bound);
    } else if (!(cert.residual <= bound * (1.0 + 1e-12) + cert.evaluationError)) {
      cert.failure = "residual " + sci(cert.residual) + " exceeds fittedK/n^q = " + sci(bound);
    }
    cert.pass = cert.failure.empty();
  } catch (const ApproxError& e) {
    cert.pass = false;
    cert.failure = e.what();
  } catch (const std::exception& e) {
    cert.pass = false;
    cert.failure = std::string("pipeline: ") + e.what();
  }
  return cert;
}

std::string certificate_to_json(const ApproxCertificate& cert) {
  const ApproxTarget& t = cert.target;
  json j;
  j["target"] = cert.alphaValue;
  j["alphaExpr"] = t.alphaText;
  j["basis"] = basis_name(t.basis);
  j["x"] = rational_to_string(domain_end(t.basis, t.x));
  j["k0"] = t.k0;
  j["q"] = t.q;
  j["n"] = t.n;
  j["profile"] = profile_name(cert.profile);
  j["denominator"] = cert.denominator.get_str();
  auto poly_json = [](const RationalPoly& p) {
    json a = json::array();
    for (const Rational& c : p.coeffs()) a.push_back(rational_to_string(c));
    return a;
  };
  j["smoothPoly"] = poly_json(cert.smoothPoly);
  j["weightedPoly"] = poly_json(cert.weightedPoly);
  j["approxBound"] = cert.approxBound;
  json coeffs = json::array();
  for (const BasisTerm& term : cert.coefficients) {
    coeffs.push_back({{"family", family_name(term.family)},
                      {"k", term.k},
                      {"c", rational_to_string(term.c)},
                      {"element", term.element()}});
  }
  j["coefficients"] = coeffs;
  j["basisValues"] = cert.basisValues;
  j["residual"] = cert.residual;
  if (t.basis == Basis::kZetaBeta) j["residualWithoutLog2"] = cert.residualWithoutLog2;
  json ladder = json::array();
  for (const LadderPoint& p : cert.ladder) {
    ladder.push_back({{"n", p.n},
                      {"residual", p.residual},
                      {"approximationError", p.approximationError},
                      {"evaluationError", p.evaluationError}});
  }
  j["ladder"] = ladder;
  j["approximationError"] = cert.approximationError;
  j["evaluationError"] = cert.evaluationError;
  j["fittedK"] = cert.fittedK;
  j["claimedBoundForm"] = cert.claimedBoundForm;
  json res = json::object();
  for (const auto& [k, v] : cert.resolutions) res[k] = v;
  j["resolutions"] = res;
  j["pass"] = cert.pass;
  if (!cert.failure.empty()) j["failure"] = cert.failure;
  return j.dump(2) + "\n";
}

CertificateCheck recheck_certificate(const std::string& json_text) {
  CertificateCheck out;
  try {
    const json j = json::parse(json_text);
    for (const char* key : {"target", "basis", "x", "k0", "q", "n", "coefficients", "basisValues", "residual",
                            "fittedK", "resolutions", "weightedPoly"}) {
      if (!j.contains(key)) {
        out.message = std::string("missing key '") + key + "'";
        return out;
      }
    }
    const Basis basis = parse_basis(j.at("basis").get<std::string>());
    const Rational x = parse_rational(j.at("x").get<std::string>());
    const int k0 = j.at("k0").get<int>();
    const std::string alpha = j.at("target").get<std::string>();
    std::vector<BasisTerm> terms;
    for (const json& c : j.at("coefficients")) {
      terms.push_back({parse_family(c.at("family").get<std::string>()), c.at("k").get<int>(),
                       parse_rational(c.at("c").get<std::string>())});
    }
    const auto values = j.at("basisValues").get<std::vector<std::string>>();
    if (values.size() != terms.size()) {
      out.message = "coefficients and basisValues differ in length";
      return out;
    }
    out.storedResidual = j.at("residual").get<double>();
    out.recomputedResidual = certificate_residual(alpha, terms, values);

    std::vector<Rational> pc;
    for (const json& c : j.at("weightedPoly")) pc.push_back(parse_rational(c.get<std::string>()));
    const RationalPoly p(std::move(pc));
    const std::vector<BasisTerm> derived = theorem_coefficients(basis, p, k0);
    out.coefficientsMatch = derived.size() == terms.size();
    for (std::size_t i = 0; out.coefficientsMatch && i < terms.size(); ++i) {
      out.coefficientsMatch =
          derived[i].family == terms[i].family && derived[i].k == terms[i].k && derived[i].c == terms[i].c;
    }

    for (std::size_t i = 0; i < terms.size(); ++i) {
      const DoubleDouble fresh = basis_value(terms[i], x).value;
      const DoubleDouble stored = parse_dd(values[i]);
      const double drift = std::abs((fresh - stored).hi()) / std::max(1.0, std::abs(stored.hi()));
      out.worstBasisDrift = std::max(out.worstBasisDrift, drift);
    }
    const bool residual_ok = std::abs(out.recomputedResidual - out.storedResidual) <= 1e-20;
    out.ok = residual_ok && out.coefficientsMatch && out.worstBasisDrift <= 1e-20;
    if (!residual_ok) {
      out.message = "recomputed residual differs from the stored one";
    } else if (!out.coefficientsMatch) {
      out.message = "coefficients do not follow from weightedPoly";
    } else if (!(out.worstBasisDrift <= 1e-20)) {
      out.message = "stored basis values drift from fresh evaluations";
    } else {
      out.message = "ok";
    }
  } catch (const std::exception& e) {
    out.ok = false;
    out.message = std::string("malformed certificate: ") + e.what();
  }
  return out;
}

}  // namespace multitrig
