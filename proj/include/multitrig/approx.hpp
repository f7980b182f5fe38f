#pragma once

// Rational approximation of a real target by linear combinations of special
// values: weighted functional -> f_alpha -> Chebyshev approximant with
// rational coefficients -> P_n -> exact basis coefficients -> certificate.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multitrig/ext_real.hpp"
#include "multitrig/rational.hpp"
#include "multitrig/rational_poly.hpp"

namespace multitrig {

// multicos:  int_0^x f w tan(pi t),          basis log C_{k+1}(x)/pi
// zetaBeta:  int_0^1 f w log cos(pi t/4),    basis beta(2k+2)/pi^{2k+1}, zeta_E(2k+1)/pi^{2k}, log 2
// multisin:  int_0^x f w cot(pi t/2),        basis log S_{k+1}(x/2)/pi
// lupuWu:    int_0^1 f w cot(pi t/2),        basis zeta(2k+1)/pi^{2k+1}
// with w = t^{2 k0} (1 - t)^{2 k0}.
enum class Basis { kMultiCos, kZetaBeta, kMultiSin, kLupuWu };
enum class Profile { kConstant, kBump };

const char* basis_name(Basis basis);
Basis parse_basis(const std::string& name);
const char* profile_name(Profile profile);
Profile parse_profile(const std::string& name);

class ApproxError : public std::runtime_error {
 public:
  ApproxError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct ApproxTarget {
  ExtReal alpha;
  std::string alphaText;  // as given by the caller
  Basis basis = Basis::kMultiCos;
  Rational x = Rational(1, 4);  // ignored (taken as 1) for zetaBeta and lupuWu
  int k0 = 1;
  int q = 1;
  int n = 3;
};

void validate(const ApproxTarget& target);

using SmoothFn = std::function<DoubleDouble(const DoubleDouble&)>;

// Right end of the integration range for the basis.
Rational domain_end(Basis basis, const Rational& x);

constexpr double kFunctionalTol = 1e-24;

ExtReal functional_value(const SmoothFn& f, Basis basis, const Rational& x, int k0);

// Plateau bump: 1 on [c - d, c + d], 0 outside (c - 2d, c + 2d), smooth in
// between; c = end/2, d = end/8.
DoubleDouble bump_profile(const DoubleDouble& t, const DoubleDouble& end);

// f_alpha = alpha g / F(g) with g the profile, so that F(f_alpha) = alpha.
struct AlphaFunction {
  SmoothFn f;
  DoubleDouble scale;  // alpha / F(g)
  ExtReal profileFunctional;
};
AlphaFunction construct_f_alpha(const ExtReal& alpha, Basis basis, const Rational& x, int k0, Profile profile);

// 10^{q+6} n^q
BigInt default_denominator(int n, int q);

class ApproxBudgetError : public ApproxError {
 public:
  ApproxBudgetError(const std::string& what, double achieved)
      : ApproxError("approximate_smooth", what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

struct SmoothApprox {
  RationalPoly poly;
  double interpolationBound = 0.0;  // Chebyshev tail estimate or 2x the dense-grid misfit
  double roundingBound = 0.0;       // sum |delta a_k| end^k
  double bound() const { return interpolationBound + roundingBound; }
};

// Chebyshev interpolation at n + 1 first-kind nodes on [0, end], exact
// conversion to monomials, each coefficient rounded to the 1/denominator
// grid (or snapped to a rational of denominator <= denominator that the
// working-precision value already represents). With strict set, a bound
// above sup|f| / n^q throws ApproxBudgetError.
SmoothApprox approximate_smooth(const SmoothFn& f, const Rational& end, int n, int q, const BigInt& denominator,
                                bool strict = false);

// w(t) s(t); asserts the vanishing derivatives of order < 2 k0 at 0 and 1.
RationalPoly build_Pn(const RationalPoly& s, int k0);

enum class Family { kMultiCos, kMultiSin, kBeta, kZetaE, kLog2, kZeta };
const char* family_name(Family family);
Family parse_family(const std::string& name);

struct BasisTerm {
  Family family;
  int k = 0;
  Rational c;
  std::string element() const;
};

// c_k = -a_k against log C_{k+1}(x)/pi
std::vector<BasisTerm> coefficients_thm1(const RationalPoly& p);

struct Thm2Coefficients {
  std::vector<BasisTerm> beta;   // (-1)^k P^{(2k)}(1) 2^{2k+1}
  std::vector<BasisTerm> zetaE;  // (-1)^k [4^k P^{(2k-1)}(0) - P^{(2k-1)}(1)/2]
  Rational log2Term;             // -int_0^1 P
};
Thm2Coefficients coefficients_thm2(const RationalPoly& p, int k0);

// c_k = 2^{k + index_shift} a_k against log S_{k+1}(x/2)/pi; index_shift is
// the resolved cotangent-moment indexing (0 or 1).
std::vector<BasisTerm> coefficients_thm3(const RationalPoly& p, int index_shift);

// c_k = (-1)^k 2 [P^{(2k)}(1)(1 - 4^{-k}) + P^{(2k)}(0)] against zeta(2k+1)/pi^{2k+1}
std::vector<BasisTerm> coefficients_thm4(const RationalPoly& p, int k0);

ExtReal basis_value(const BasisTerm& term, const Rational& x);

struct LadderPoint {
  int n = 0;
  double residual = 0.0;
  double approximationError = 0.0;
  double evaluationError = 0.0;
};

struct ApproxCertificate {
  ApproxTarget target;
  Profile profile = Profile::kConstant;
  BigInt denominator;
  RationalPoly smoothPoly;    // s_r
  RationalPoly weightedPoly;  // P_n
  double approxBound = 0.0;   // sup-norm bound for |f_alpha - s_r|
  std::vector<BasisTerm> coefficients;
  std::vector<std::string> basisValues;  // 32 significant digits, same order
  std::string alphaValue;                // 32 significant digits
  double residual = 0.0;
  double residualWithoutLog2 = 0.0;  // zetaBeta only
  // mass * approxBound + |alpha| relerr(F(g)), mass = int w |kernel|
  double approximationError = 0.0;
  // sum |c_k| err(v_k) plus the decimal rounding of the stored values
  double evaluationError = 0.0;
  std::vector<LadderPoint> ladder;
  double fittedK = 0.0;
  std::string claimedBoundForm = "K/n^q with fitted K";
  std::vector<std::pair<std::string, std::string>> resolutions;
  bool pass = false;
  std::string failure;
};

// Ladder n in {max(3, n/4), n/2, n}; fittedK = max approximationError_i n_i^q
// over the ladder. Pass iff every stage succeeded, evaluationError <=
// max(fittedK / n^q, 1e-20 max(1, |alpha|)) (the basis values resolve the
// claimed scale) and residual <= fittedK / n^q + evaluationError.
ApproxCertificate certify(const ApproxTarget& target, Profile profile = Profile::kConstant,
                          std::optional<BigInt> denominator = std::nullopt);

// |alpha - sum c_k v_k| with alpha and v_k parsed from their decimal strings.
double certificate_residual(const std::string& alpha, const std::vector<BasisTerm>& terms,
                            const std::vector<std::string>& values, bool include_log2 = true);

std::string certificate_to_json(const ApproxCertificate& cert);

struct CertificateCheck {
  bool ok = false;
  double storedResidual = 0.0;
  double recomputedResidual = 0.0;
  bool coefficientsMatch = false;  // re-derived from weightedPoly
  double worstBasisDrift = 0.0;    // stored vs freshly evaluated basis values
  std::string message;
};

// Independent recheck from the serialized form alone.
CertificateCheck recheck_certificate(const std::string& json_text);

}  // namespace multitrig
