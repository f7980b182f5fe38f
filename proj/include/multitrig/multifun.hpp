#pragma once

// Multiple cosine C_r and multiple sine S_r on the real segments where their
// integral representations are proper, evaluated by two independent routes.

#include <cstddef>
#include <stdexcept>

#include "multitrig/dirichlet.hpp"
#include "multitrig/ext_real.hpp"

namespace multitrig {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Route { kProduct, kIntegral, kClosedForm };

const char* route_name(Route route);

struct ProductTruncation {
  // odd n for C_r, all n for S_r
  std::size_t oddTermsMax = 2000000;
  // bound on the omitted factors; when tailCorrected is set the leading
  // omitted orders were added back exactly and this bounds what remains
  double tailBound = 0.0;
  bool tailCorrected = false;
};

struct MultiFunValue {
  int r = 0;
  DoubleDouble x;
  ExtReal logValue;
  Route route = Route::kIntegral;
  ProductTruncation truncation;  // meaningful for Route::kProduct only
};

// log P_r(u) = log(1 - u) + u + u^2/2 + ... + u^r/r, |u| < 1.
ExtReal log_Pr(int r, const DoubleDouble& u);

// log C_r(x), 0 <= x < 1/2. r = 1 uses C_1(x) = 2 cos(pi x); r >= 2 uses
// -pi * int_0^x t^{r-1} tan(pi t) dt.
MultiFunValue log_multicos(int r, const DoubleDouble& x);
MultiFunValue log_multicos_integral(int r, const DoubleDouble& x);
MultiFunValue log_multicos_product(int r, const DoubleDouble& x, std::size_t terms = ProductTruncation{}.oddTermsMax,
                                   bool tail_corrected = false);

// log S_r(y), 0 <= y < 1 (y > 0 for r = 1). r = 1 uses S_1(y) = 2 sin(pi y);
// r >= 2 uses pi * int_0^y t^{r-1} cot(pi t) dt.
MultiFunValue log_multisin(int r, const DoubleDouble& y);
MultiFunValue log_multisin_integral(int r, const DoubleDouble& y);
MultiFunValue log_multisin_product(int r, const DoubleDouble& y, std::size_t terms = ProductTruncation{}.oddTermsMax,
                                   bool tail_corrected = false);

SpecialValue as_special(const MultiFunValue& v, SpecialKind kind);

// Closed form of log C_r(1/4) in terms of eta and beta values, r >= 2.
ExtReal multicos_quarter_closed_form(int r);

// |log C_r(1/4) - closed form|, 2 <= r <= 12; err carries both sides' bounds.
ExtReal verify_eq_1_14(int r, Route route = Route::kIntegral);

// |zeta(3) - (4 pi^2/21)(4G/pi + 16 log C_3(1/4) - log(2)/2)|.
ExtReal verify_zeta3_corollary(Route route = Route::kIntegral);

}  // namespace multitrig
