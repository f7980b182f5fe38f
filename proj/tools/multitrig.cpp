// Command-line front end: special values, identity verification, approximation
// certificates and reproducible tables.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "multitrig/approx.hpp"
#include "multitrig/dirichlet.hpp"
#include "multitrig/identities.hpp"
#include "multitrig/multifun.hpp"

using namespace multitrig;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sci(double v, int digits = 3) { return to_string(DoubleDouble(v), digits, true); }

// -------------------------------------------------------------------- alpha

ExtReal parse_alpha(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
  if (text.empty()) throw UsageError("--alpha: empty expression");
  if (text[0] == '-') return -parse_alpha(text.substr(1));
  const auto open = text.find('(');
  if (open != std::string::npos) {
    if (text.back() != ')') throw UsageError("--alpha: unbalanced parentheses in '" + text + "'");
    const std::string name = text.substr(0, open), arg = text.substr(open + 1, text.size() - open - 2);
    if (name == "sqrt") {
      const Rational r = parse_rational(arg);
      if (r < 0) throw UsageError("--alpha: sqrt of a negative number");
      const DoubleDouble v = sqrt(rational_to_dd(r));
      return ExtReal(v, 4.0 * DoubleDouble::epsilon() * std::abs(v.hi()));
    }
    int s = 0;
    try {
      s = std::stoi(arg);
    } catch (const std::exception&) {
      throw UsageError("--alpha: '" + arg + "' is not an integer order");
    }
    if (name == "zeta") return zeta(s).val;
    if (name == "eta") return eta(s).val;
    if (name == "beta") return beta_fn(s).val;
    if (name == "lambda") return lambda_fn(s).val;
    throw UsageError("--alpha: unknown function '" + name + "'");
  }
  if (text == "pi") return pi_ext();
  if (text == "log2") return ln2_ext();
  if (text == "catalan") return catalan().val;
  try {
    return rational_to_ext(parse_rational(text));
  } catch (const std::invalid_argument&) {
    throw UsageError("--alpha: cannot parse '" + text + "'");
  }
}

// ----------------------------------------------------------------- manifest

struct Manifest {
  std::string command;
  json params = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::string summary;

  void emit(int code) const {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json m = {{"command", command},
              {"params", params},
              {"version", MULTITRIG_VERSION},
              {"precision", "double-double (~32 significant digits)"},
              {"wallSeconds", wall},
              {"exitCode", code},
              {"summary", summary}};
    std::cerr << "manifest " << m.dump() << "\n";
  }
};

// ------------------------------------------------------------------- values

struct ValuesArgs {
  std::string kind;
  int order = 0;
  std::string x;
  int digits = 32;
  std::string route = "integral";
};

int cmd_values(const ValuesArgs& a, Manifest& man) {
  if (a.digits < 1 || a.digits > 32) throw UsageError("--digits must lie in [1, 32]");
  man.params = {{"kind", a.kind}, {"order", a.order}, {"x", a.x}, {"digits", a.digits}, {"route", a.route}};
  ExtReal v;
  std::string label;
  const std::string k = a.kind;
  if (k == "zeta" || k == "eta" || k == "lambda" || k == "beta") {
    const SpecialValue s = k == "zeta" ? zeta(a.order) : k == "eta" ? eta(a.order) : k == "lambda" ? lambda_fn(a.order) : beta_fn(a.order);
    v = s.val;
    label = k + "(" + std::to_string(a.order) + ")";
  } else if (k == "catalan") {
    v = catalan().val;
    label = "G";
  } else if (k == "multicos" || k == "multisin") {
    if (a.x.empty()) throw UsageError(k + " needs an argument x");
    const DoubleDouble x = rational_to_dd(parse_rational(a.x));
    const bool cos = k == "multicos";
    MultiFunValue mv;
    if (a.route == "integral") {
      mv = cos ? log_multicos(a.order, x) : log_multisin(a.order, x);
    } else if (a.route == "product") {
      mv = cos ? log_multicos_product(a.order, x) : log_multisin_product(a.order, x);
    } else {
      throw UsageError("--route must be integral or product");
    }
    v = mv.logValue;
    label = std::string("log ") + (cos ? "C_" : "S_") + std::to_string(a.order) + "(" + a.x + ")";
    if (mv.route == Route::kProduct) v.err += mv.truncation.tailBound;
  } else {
    throw UsageError("unknown kind '" + k + "' (zeta, eta, lambda, beta, catalan, multicos, multisin)");
  }
  std::cout << label << " = " << to_string(v.value, a.digits) << "  +- " << sci(v.err, 2) << "\n";
  man.summary = "ok";
  return kExitPass;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  double tol = -1.0;
  std::string certificate;
};

bool passes(const IdentityReport& r, double tol_override) {
  if (tol_override < 0) return r.pass;
  // strict: the override replaces the whole allowance
  return r.residual <= tol_override;
}

int cmd_verify(const VerifyArgs& a, Manifest& man) {
  man.params = {{"suite", a.suite}, {"tol", a.tol}, {"certificate", a.certificate}};
  if (!a.certificate.empty()) {
    std::ifstream in(a.certificate);
    if (!in) throw UsageError("cannot read certificate '" + a.certificate + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const CertificateCheck chk = recheck_certificate(buf.str());
    std::cout << (chk.ok ? "PASS" : "FAIL") << "  certificate " << a.certificate << "\n"
              << "  stored residual     " << sci(chk.storedResidual, 17) << "\n"
              << "  recomputed residual " << sci(chk.recomputedResidual, 17) << "\n"
              << "  coefficients from weightedPoly: " << (chk.coefficientsMatch ? "match" : "MISMATCH") << "\n"
              << "  worst basis value drift " << sci(chk.worstBasisDrift) << "\n"
              << "  " << chk.message << "\n";
    man.summary = chk.ok ? "certificate ok" : chk.message;
    return chk.ok ? kExitPass : kExitNumeric;
  }
  const bool all = a.suite == "all";
  if (!all && a.suite != "identities" && a.suite != "lemmas" && a.suite != "resolutions") {
    throw UsageError("--suite must be one of all, identities, lemmas, resolutions");
  }
  int total = 0, failed = 0;
  std::string first_failure;
  auto table = [&](const std::vector<IdentityReport>& reports) {
    for (const IdentityReport& r : reports) {
      const bool ok = passes(r, a.tol);
      const double tol = a.tol < 0 ? r.tol : a.tol;
      std::printf("%s  %-22s %-18s lhs=%s rhs=%s residual=%s tol=%s\n", ok ? "PASS" : "FAIL", identity_name(r.id),
                  r.params.c_str(), to_string(r.lhs.value, 20, true).c_str(), to_string(r.rhs.value, 20, true).c_str(),
                  sci(r.residual).c_str(), sci(tol, 1).c_str());
      ++total;
      if (!ok) {
        ++failed;
        if (first_failure.empty()) first_failure = std::string(identity_name(r.id)) + " " + r.params;
      }
    }
  };
  if (all || a.suite == "identities") table(identity_suite());
  if (all || a.suite == "lemmas") table(lemma_suite());
  if (all || a.suite == "resolutions") {
    for (const Resolution& res : resolution_suite()) {
      ++total;
      std::printf("%s  %s: %s\n", res.unique ? "RESOLVED" : "UNRESOLVED", res.question.c_str(),
                  res.winner.empty() ? "(none)" : res.winner.c_str());
      for (const Candidate& c : res.candidates) {
        std::printf("      %-70s residual=%s%s\n", c.reading.c_str(), c.finite ? sci(c.residual).c_str() : "non-finite",
                    c.reading == res.winner ? "  <- winner" : "");
      }
      if (!res.unique) {
        ++failed;
        if (first_failure.empty()) first_failure = res.question;
      }
    }
  }
  man.summary = std::to_string(total - failed) + "/" + std::to_string(total) + " passed";
  std::printf("%s\n", man.summary.c_str());
  if (failed > 0) {
    std::cerr << "first failure: " << first_failure << "\n";
    return kExitNumeric;
  }
  return kExitPass;
}

// -------------------------------------------------------------- approximate

struct ApproxArgs {
  std::string alpha;
  std::string basis;
  std::string x;
  int k0 = 1;
  int q = 1;
  int n = 16;
  std::string profile = "constant";
  std::string out;
};

int cmd_approximate(const ApproxArgs& a, Manifest& man) {
  ApproxTarget t;
  t.alpha = parse_alpha(a.alpha);
  t.alphaText = a.alpha;
  try {
    t.basis = parse_basis(a.basis);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  t.x = a.x.empty() ? (t.basis == Basis::kMultiSin ? Rational(1, 2) : Rational(1, 4)) : parse_rational(a.x);
  t.k0 = a.k0;
  t.q = a.q;
  t.n = a.n;
  Profile profile;
  try {
    profile = parse_profile(a.profile);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  man.params = {{"alpha", a.alpha}, {"basis", basis_name(t.basis)}, {"x", rational_to_string(t.x)},
                {"k0", t.k0},       {"q", t.q},                      {"n", t.n},
                {"profile", a.profile}, {"out", a.out}};
  try {
    validate(t);
  } catch (const ApproxError& e) {
    throw UsageError(e.what());
  }

  const ApproxCertificate cert = certify(t, profile);
  if (!a.out.empty()) {
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + a.out + "'");
    out << certificate_to_json(cert);
  }
  for (const LadderPoint& p : cert.ladder) {
    std::printf("  n=%-4d residual=%s approximation=%s evaluation=%s\n", p.n, sci(p.residual).c_str(),
                sci(p.approximationError).c_str(), sci(p.evaluationError).c_str());
  }
  const double bound = cert.fittedK / std::pow(static_cast<double>(t.n), t.q);
  std::printf("%s  basis=%s alpha=%s n=%d q=%d terms=%zu residual=%s fittedK=%s fittedK/n^q=%s\n",
              cert.pass ? "PASS" : "FAIL", basis_name(t.basis), a.alpha.c_str(), t.n, t.q, cert.coefficients.size(),
              sci(cert.residual).c_str(), sci(cert.fittedK).c_str(), sci(bound).c_str());
  if (t.basis == Basis::kZetaBeta) std::printf("  residual without the log 2 term: %s\n", sci(cert.residualWithoutLog2).c_str());
  if (!cert.pass) std::cerr << "stage failure: " << cert.failure << "\n";
  man.summary = cert.pass ? "certificate passed" : cert.failure;
  return cert.pass ? kExitPass : kExitNumeric;
}

// -------------------------------------------------------------------- table

struct TableArgs {
  std::string which;
  int rmax = 0;
  std::string format = "csv";
  std::string out;
};

int cmd_table(const TableArgs& a, Manifest& man) {
  man.params = {{"which", a.which}, {"rmax", a.rmax}, {"format", a.format}, {"out", a.out}};
  int rmin = 0, rlimit = 0;
  std::function<IdentityReport(int)> row;
  if (a.which == "eq1") {
    rmin = 2, rlimit = 10, row = sinlog_moment;
  } else if (a.which == "lemma31") {
    rmin = 0, rlimit = 12, row = coslog_moment;
  } else if (a.which == "eq114") {
    rmin = 2, rlimit = 12, row = multicos_quarter_check;
  } else {
    throw UsageError("--which must be one of eq1, lemma31, eq114");
  }
  if (a.rmax > rlimit) throw UsageError("--rmax for " + a.which + " is at most " + std::to_string(rlimit));
  if (a.format != "csv" && a.format != "json") throw UsageError("--format must be csv or json");

  std::ostringstream os;
  json rows = json::array();
  if (a.format == "csv") os << "which,r,lhs,rhs,residual,tol,pass\n";
  int failed = 0, count = 0;
  for (int r = rmin; r <= a.rmax; ++r) {
    const IdentityReport rep = row(r);
    ++count;
    if (!rep.pass) ++failed;
    const std::string lhs = to_string(rep.lhs.value, 32, true), rhs = to_string(rep.rhs.value, 32, true);
    if (a.format == "csv") {
      os << a.which << "," << r << "," << lhs << "," << rhs << "," << sci(rep.residual) << "," << sci(rep.tol, 1) << ","
         << (rep.pass ? "true" : "false") << "\n";
    } else {
      rows.push_back({{"which", a.which},
                      {"r", r},
                      {"lhs", lhs},
                      {"rhs", rhs},
                      {"residual", sci(rep.residual)},
                      {"tol", sci(rep.tol, 1)},
                      {"pass", rep.pass}});
    }
  }
  if (a.format == "json") os << rows.dump(2) << "\n";
  if (a.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + a.out + "'");
    out << os.str();
  }
  man.summary = std::to_string(count - failed) + "/" + std::to_string(count) + " rows within tolerance";
  return failed == 0 ? kExitPass : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multitrig: multiple sine/cosine values, Dirichlet values, identity checks and approximation certificates"};
  app.set_version_flag("--version", MULTITRIG_VERSION);
  app.require_subcommand(1);

  ValuesArgs va;
  auto* values = app.add_subcommand("values", "print a special value with its error bound");
  values->add_option("kind", va.kind, "zeta, eta, lambda, beta, catalan, multicos (log C_r), multisin (log S_r)")->required();
  values->add_option("order", va.order, "order s or r (ignored for catalan)");
  values->add_option("x", va.x, "argument for multicos/multisin (decimal or p/q)");
  values->add_option("--digits", va.digits, "significant digits (1..32)");
  values->add_option("--route", va.route, "integral or product (multicos/multisin)");

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "check identities, lemmas, resolutions or a certificate");
  verify->add_option("--suite", ve.suite, "all, identities, lemmas, resolutions");
  verify->add_option("--tol", ve.tol, "override every identity tolerance");
  verify->add_option("--certificate", ve.certificate, "recheck a certificate file instead");

  ApproxArgs ap;
  auto* approximate = app.add_subcommand("approximate", "build an approximation certificate");
  approximate->add_option("--alpha", ap.alpha, "target: decimal, p/q, pi, log2, catalan, sqrt(r), zeta(s), eta(s), beta(s), lambda(s)")
      ->required();
  approximate->add_option("--basis", ap.basis, "multicos, zetaBeta, multisin, lupuWu")->required();
  approximate->add_option("--x", ap.x, "anchor x (multicos: 0 < x < 1/2, multisin: 0 < x < 1)");
  approximate->add_option("--k0", ap.k0, "weight order k0 >= 1");
  approximate->add_option("--q", ap.q, "decay exponent q >= 1");
  approximate->add_option("--n", ap.n, "budget n >= 3");
  approximate->add_option("--profile", ap.profile, "constant or bump");
  approximate->add_option("--out", ap.out, "certificate file (JSON)");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "tabulate lhs/rhs/residual rows");
  table->add_option("--which", ta.which, "eq1 (log-sine moments), lemma31 (log-cos moments), eq114 (log C_r(1/4))")
      ->required();
  table->add_option("--rmax", ta.rmax, "largest r")->required();
  table->add_option("--format", ta.format, "csv or json");
  table->add_option("--out", ta.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Manifest man;
  for (int i = 0; i < argc; ++i) man.command += (i ? " " : "") + std::string(argv[i]);
  int code = kExitPass;
  try {
    if (*values) code = cmd_values(va, man);
    if (*verify) code = cmd_verify(ve, man);
    if (*approximate) code = cmd_approximate(ap, man);
    if (*table) code = cmd_table(ta, man);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    man.summary = e.what();
    code = kExitUsage;
  } catch (const std::domain_error& e) {
    // out-of-range orders and arguments
    std::cerr << "usage error: " << e.what() << "\n";
    man.summary = e.what();
    code = kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    man.summary = e.what();
    code = kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    man.summary = e.what();
    code = kExitNumeric;
  }
  man.emit(code);
  return code;
}
