#include "multitrig/multifun.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "multitrig/quadrature.hpp"

namespace multitrig {

namespace {

constexpr double kIntegralTol = 1e-24;
constexpr double kEps = DoubleDouble::epsilon();

void require_order(int r, const char* name) {
  if (r < 1) throw DomainError(std::string(name) + ": order r must be >= 1");
}

std::string fmt(const DoubleDouble& x) { return to_string(x, 20); }

void require_multicos_arg(const DoubleDouble& x, const char* name) {
  if (!(x >= DoubleDouble(0.0)) || !(x < DoubleDouble(0.5))) {
    throw DomainError(std::string(name) + ": x = " + fmt(x) + " outside [0, 1/2)");
  }
}

void require_multisin_arg(int r, const DoubleDouble& y, const char* name) {
  if (!(y >= DoubleDouble(0.0)) || !(y < DoubleDouble(1.0))) {
    throw DomainError(std::string(name) + ": y = " + fmt(y) + " outside [0, 1)");
  }
  if (r == 1 && y == DoubleDouble(0.0)) throw DomainError(std::string(name) + ": log S_1 diverges at y = 0");
}

ExtReal closed_form_log(const DoubleDouble& trig2) {
  // trig2 = 2 cos(pi x) or 2 sin(pi y), computed to a few ulps
  const DoubleDouble v = log(trig2);
  return {v, detail::up(16.0 * kEps * (std::abs(v.hi()) + 1.0))};
}

// Pair term m^{r-1} [log P_r(x/m) + (-1)^{r-1} log P_r(-x/m)] expanded as
// -2 sum_i c_i w^{1+i}, c_i = x^{r+1+2i}/(r+1+2i), w = 1/m^2.
struct PairSeries {
  std::vector<DoubleDouble> c;

  PairSeries(int r, const DoubleDouble& x) {
    DoubleDouble p = pow(x, r + 1);
    const DoubleDouble x2 = x * x;
    for (int i = 0; i < 80; ++i) {
      c.push_back(p / static_cast<double>(r + 1 + 2 * i));
      p *= x2;
    }
  }

  // returns the term; truncation of the inner series is folded into err
  DoubleDouble eval(const DoubleDouble& w, double& err) const {
    DoubleDouble s = 0.0;
    DoubleDouble wp = w;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const DoubleDouble t = c[i] * wp;
      s += t;
      if (std::abs(t.hi()) <= 1e-40 * std::abs(s.hi()) || t.hi() == 0.0) {
        err += 2.0 * std::abs(t.hi());  // geometric remainder with ratio <= 1/4
        break;
      }
      wp *= w;
    }
    return ldexp(s, 1) * -1.0;
  }
};

constexpr int kCorrectedOrders = 4;

struct ProductSum {
  ExtReal value;
  double tail_bound = 0.0;
};

// Sum of the pair terms over the first `terms` indices:
//   cosine: m = n/2, n = 1, 3, 5, ...   sine: m = n, n = 1, 2, 3, ...
ProductSum product_sum(int r, const DoubleDouble& x, std::size_t terms, bool cosine, bool corrected) {
  ProductSum out;
  if (x == DoubleDouble(0.0)) return out;
  const PairSeries series(r, x);
  DoubleDouble sum = 0.0;
  double err = 0.0;
  double abs_sum = 0.0;
  std::array<DoubleDouble, kCorrectedOrders> partial{};
  const double sign = (r - 1) % 2 == 0 ? 1.0 : -1.0;
  for (std::size_t k = 0; k < terms; ++k) {
    const double n = cosine ? 2.0 * static_cast<double>(k) + 1.0 : static_cast<double>(k) + 1.0;
    const DoubleDouble w = DoubleDouble(cosine ? 4.0 : 1.0) / DoubleDouble(n * n);
    DoubleDouble term;
    if (x.hi() * x.hi() * w.hi() > 0.25) {
      // |x/m| > 1/2: the inner series converges slowly, use the logarithm
      const DoubleDouble m = cosine ? DoubleDouble(n) / 2.0 : DoubleDouble(n);
      const DoubleDouble u = x / m;
      const ExtReal a = log_Pr(r, u), b = log_Pr(r, -u);
      const DoubleDouble mp = pow(m, r - 1);
      term = mp * (a.value + sign * b.value);
      err += std::abs(mp.hi()) * (a.err + b.err);
    } else {
      term = series.eval(w, err);
    }
    sum += term;
    abs_sum += std::abs(term.hi());
    DoubleDouble wp = w;
    for (auto& p : partial) {
      p += wp;
      wp *= w;
    }
  }
  const double terms_d = static_cast<double>(terms);
  // omitted sum of w = 1/m^2
  double omitted_w;
  double first_m;
  if (cosine) {
    const double nf = 2.0 * terms_d + 1.0;
    omitted_w = 4.0 * (1.0 / (nf * nf) + 1.0 / (2.0 * nf));
    first_m = nf / 2.0;
  } else {
    omitted_w = terms_d > 0 ? 1.0 / terms_d : 2.0;
    first_m = terms_d + 1.0;
  }
  const double u0sq = x.hi() * x.hi() / (first_m * first_m);
  const double c0 = series.c[0].hi();
  double tail = 2.0 * c0 * omitted_w / (1.0 - u0sq);
  double rounding = 8.0 * kEps * abs_sum * 4.0;
  if (corrected) {
    for (int i = 0; i < kCorrectedOrders; ++i) {
      const int s = 2 + 2 * i;
      const ExtReal total = cosine ? ExtReal(std::ldexp(1.0, s)) * lambda_fn(s).val : zeta(s).val;
      const ExtReal rest = total - ExtReal(partial[static_cast<std::size_t>(i)]);
      const DoubleDouble add = series.c[static_cast<std::size_t>(i)] * rest.value * -2.0;
      sum += add;
      rounding += 2.0 * std::abs(series.c[static_cast<std::size_t>(i)].hi()) *
                  (rest.err + 4.0 * kEps * terms_d * std::abs(total.value.hi()));
    }
    tail *= std::pow(u0sq, kCorrectedOrders);
  }
  out.tail_bound = detail::up(tail);
  out.value = ExtReal(sum, detail::up(err + rounding + out.tail_bound));
  return out;
}

MultiFunValue product_value(int r, const DoubleDouble& x, std::size_t terms, bool corrected, bool cosine) {
  ProductSum p = product_sum(r, x, terms, cosine, corrected);
  ExtReal v = p.value;
  if (cosine) {
    // C_1 carries the extra factor 2 of 2 cos(pi x)
    if (r == 1) v += ln2_ext();
  } else if (r == 1) {
    v += log(ExtReal(2.0) * pi_ext() * ExtReal(x));
  } else {
    v += pow(ExtReal(x), r - 1) / ExtReal(static_cast<double>(r - 1));
  }
  MultiFunValue out;
  out.r = r;
  out.x = x;
  out.logValue = v;
  out.route = Route::kProduct;
  out.truncation.oddTermsMax = terms;
  out.truncation.tailBound = p.tail_bound;
  out.truncation.tailCorrected = corrected;
  return out;
}

}  // namespace

const char* route_name(Route route) {
  switch (route) {
    case Route::kProduct: return "product";
    case Route::kIntegral: return "integral";
    case Route::kClosedForm: return "closed-form";
  }
  return "unknown";
}

ExtReal log_Pr(int r, const DoubleDouble& u) {
  require_order(r, "log_Pr");
  if (!(abs(u) < DoubleDouble(1.0))) throw DomainError("log_Pr: requires |u| < 1, got u = " + fmt(u));
  if (std::abs(u.hi()) <= 0.5) {
    // -sum_{j>r} u^j/j; the remainder after the last term is below twice it
    DoubleDouble s = 0.0;
    DoubleDouble p = pow(u, r + 1);
    double abs_sum = 0.0;
    for (int j = r + 1; j < r + 200; ++j) {
      const DoubleDouble t = p / static_cast<double>(j);
      s += t;
      abs_sum += std::abs(t.hi());
      if (std::abs(t.hi()) <= 1e-40 * std::abs(s.hi()) || t.hi() == 0.0) break;
      p *= u;
    }
    return {-s, detail::up(4.0 * kEps * abs_sum + 1e-40 * std::abs(s.hi()) * 2.0)};
  }
  DoubleDouble s = log(DoubleDouble(1.0) - u);
  double abs_sum = std::abs(s.hi());
  DoubleDouble p = u;
  for (int j = 1; j <= r; ++j) {
    const DoubleDouble t = p / static_cast<double>(j);
    s += t;
    abs_sum += std::abs(t.hi());
    p *= u;
  }
  return {s, detail::up(16.0 * kEps * abs_sum)};
}

MultiFunValue log_multicos_integral(int r, const DoubleDouble& x) {
  require_order(r, "log_multicos");
  require_multicos_arg(x, "log_multicos");
  MultiFunValue out;
  out.r = r;
  out.x = x;
  if (r == 1) {
    out.logValue = closed_form_log(ldexp(cospi(x), 1));
    out.route = Route::kClosedForm;
    return out;
  }
  out.route = Route::kIntegral;
  if (x == DoubleDouble(0.0)) return out;
  const auto res = integrate([r](const DoubleDouble& t) { return pow(t, r - 1) * tanpi(t); }, 0.0, x,
                             kIntegralTol);
  out.logValue = -(pi_ext() * res.value);
  return out;
}

MultiFunValue log_multicos(int r, const DoubleDouble& x) { return log_multicos_integral(r, x); }

MultiFunValue log_multicos_product(int r, const DoubleDouble& x, std::size_t terms, bool tail_corrected) {
  require_order(r, "log_multicos_product");
  require_multicos_arg(x, "log_multicos_product");
  return product_value(r, x, terms, tail_corrected, true);
}

MultiFunValue log_multisin_integral(int r, const DoubleDouble& y) {
  require_order(r, "log_multisin");
  require_multisin_arg(r, y, "log_multisin");
  MultiFunValue out;
  out.r = r;
  out.x = y;
  if (r == 1) {
    out.logValue = closed_form_log(ldexp(sinpi(y), 1));
    out.route = Route::kClosedForm;
    return out;
  }
  out.route = Route::kIntegral;
  if (y == DoubleDouble(0.0)) return out;
  // t^{r-1} cot(pi t) = t^{r-2} (pi t) cot(pi t) / pi, regular at 0
  const auto res = integrate(
      [r](const DoubleDouble& t) { return pow(t, r - 2) * z_cot_z(dd_const::pi() * t); }, 0.0, y,
      kIntegralTol, SingularityHints::pole_left());
  out.logValue = res.value;
  out.logValue.err = detail::up(out.logValue.err + detail::rounding(out.logValue.value));
  return out;
}

MultiFunValue log_multisin(int r, const DoubleDouble& y) { return log_multisin_integral(r, y); }

MultiFunValue log_multisin_product(int r, const DoubleDouble& y, std::size_t terms, bool tail_corrected) {
  require_order(r, "log_multisin_product");
  require_multisin_arg(r, y, "log_multisin_product");
  return product_value(r, y, terms, tail_corrected, false);
}

SpecialValue as_special(const MultiFunValue& v, SpecialKind kind) { return {kind, v.r, v.x, v.logValue}; }

ExtReal multicos_quarter_closed_form(int r) {
  if (r < 2) throw DomainError("multicos_quarter_closed_form: requires r >= 2");
  const ExtReal pi = pi_ext();
  const ExtReal rm1(static_cast<double>(r - 1));
  ExtReal rhs = ln2_ext() / ExtReal(std::ldexp(1.0, 2 * r - 1));
  // sin(r pi / 2) is 0, 1 or -1
  const int sin_r = (r % 2 == 0) ? 0 : ((r % 4 == 1) ? 1 : -1);
  if (sin_r != 0) {
    const ExtReal f = rational_to_ext(Rational(factorial(static_cast<unsigned>(r - 1))));
    rhs -= ExtReal(static_cast<double>(sin_r)) * f / pow(ExtReal(2.0) * pi, r - 1) * eta(r).val;
  }
  ExtReal beta_sum = 0.0;
  for (int k = 0; k <= (r - 2) / 2; ++k) {
    const Rational c = Rational(factorial(static_cast<unsigned>(2 * k)) * binomial(static_cast<unsigned>(r - 2), static_cast<unsigned>(2 * k))) *
                       (k % 2 == 0 ? 1 : -1);
    beta_sum += rational_to_ext(c) * pow(ExtReal(2.0) / pi, 2 * k + 1) * beta_fn(2 * k + 2).val;
  }
  rhs -= rm1 / ExtReal(std::ldexp(1.0, 2 * (r - 1))) * beta_sum;
  ExtReal eta_sum = 0.0;
  for (int k = 1; k <= (r - 1) / 2; ++k) {  // ceil((r-2)/2)
    const Rational c = Rational(factorial(static_cast<unsigned>(2 * k - 1)) * binomial(static_cast<unsigned>(r - 2), static_cast<unsigned>(2 * k - 1))) *
                       (k % 2 == 1 ? 1 : -1);
    eta_sum += rational_to_ext(c) / pow(pi, 2 * k) * eta(2 * k + 1).val;
  }
  rhs -= rm1 / ExtReal(std::ldexp(1.0, 2 * r - 1)) * eta_sum;
  return rhs;
}

namespace {
ExtReal residual_of(const ExtReal& a, const ExtReal& b) {
  return {abs(a.value - b.value), detail::up(a.err + b.err)};
}

ExtReal multicos_by_route(int r, const DoubleDouble& x, Route route) {
  if (route == Route::kProduct) return log_multicos_product(r, x, ProductTruncation{}.oddTermsMax, false).logValue;
  return log_multicos(r, x).logValue;
}
}  // namespace

ExtReal verify_eq_1_14(int r, Route route) {
  if (r < 2 || r > 12) throw DomainError("verify_eq_1_14: r must lie in [2, 12]");
  return residual_of(multicos_by_route(r, 0.25, route), multicos_quarter_closed_form(r));
}

ExtReal verify_zeta3_corollary(Route route) {
  const ExtReal pi = pi_ext();
  const ExtReal c3 = multicos_by_route(3, 0.25, route);
  const ExtReal inner = ExtReal(4.0) * catalan().val / pi + ExtReal(16.0) * c3 - ln2_ext() * ExtReal(0.5);
  const ExtReal rhs = ExtReal(4.0) * pi * pi / ExtReal(21.0) * inner;
  return residual_of(zeta(3).val, rhs);
}

}  // namespace multitrig
