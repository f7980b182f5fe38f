#include "multitrig/quadrature.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <sstream>
#include <vector>

namespace multitrig {

namespace {

struct GaussRule {
  // nodes x_i > 0 on [-1, 1] and weights; the rule is symmetric
  std::array<DoubleDouble, kGaussNodes / 2> x;
  std::array<DoubleDouble, kGaussNodes / 2> w;
};

void legendre(const DoubleDouble& x, DoubleDouble& p, DoubleDouble& dp) {
  DoubleDouble p0 = 1.0;
  DoubleDouble p1 = x;
  for (int k = 1; k < kGaussNodes; ++k) {
    const DoubleDouble p2 = (x * p1 * static_cast<double>(2 * k + 1) - p0 * static_cast<double>(k)) /
                            static_cast<double>(k + 1);
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = (x * p1 - p0) * static_cast<double>(kGaussNodes) / (x * x - 1.0);
}

GaussRule make_rule() {
  GaussRule rule{};
  constexpr int n = kGaussNodes;
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < n / 2; ++i) {
    DoubleDouble x = std::cos(pi * (i + 0.75) / (n + 0.5));
    DoubleDouble p, dp;
    for (int it = 0; it < 12; ++it) {
      legendre(x, p, dp);
      x = x - p / dp;
    }
    legendre(x, p, dp);
    rule.x[static_cast<std::size_t>(i)] = x;
    rule.w[static_cast<std::size_t>(i)] = DoubleDouble(2.0) / ((DoubleDouble(1.0) - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& rule() {
  static const GaussRule r = make_rule();
  return r;
}

enum class Map { kIdentity, kLeftSquare, kRightSquare };

// One integration piece in the variable u; t(u) and dt/du depend on the map.
struct Piece {
  Map map;
  DoubleDouble a, b;  // original interval of this piece
  DoubleDouble u0, u1;
};

struct PanelSum {
  DoubleDouble value;
  double abs_sum = 0.0;  // sum |w f| for the rounding estimate
};

class Evaluator {
 public:
  Evaluator(const Integrand& f, std::size_t& evaluations) : f_(f), evaluations_(evaluations) {}

  PanelSum panel(const Piece& piece, const DoubleDouble& lo, const DoubleDouble& hi) const {
    const auto& g = rule();
    const DoubleDouble half = ldexp(hi - lo, -1);
    const DoubleDouble mid = ldexp(hi + lo, -1);
    PanelSum s;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      const DoubleDouble dx = half * g.x[i];
      const DoubleDouble fl = sample(piece, mid - dx);
      const DoubleDouble fr = sample(piece, mid + dx);
      s.value += g.w[i] * (fl + fr);
      s.abs_sum += g.w[i].hi() * (std::abs(fl.hi()) + std::abs(fr.hi()));
    }
    s.value *= half;
    s.abs_sum *= std::abs(half.hi());
    return s;
  }

 private:
  DoubleDouble sample(const Piece& piece, const DoubleDouble& u) const {
    ++evaluations_;
    DoubleDouble t, jac;
    switch (piece.map) {
      case Map::kIdentity:
        t = u;
        jac = 1.0;
        break;
      case Map::kLeftSquare: {
        const DoubleDouble len = piece.b - piece.a;
        t = piece.a + len * u * u;
        jac = ldexp(len * u, 1);
        break;
      }
      case Map::kRightSquare: {
        const DoubleDouble len = piece.b - piece.a;
        t = piece.b - len * u * u;
        jac = ldexp(len * u, 1);
        break;
      }
    }
    const DoubleDouble y = f_(t);
    if (!isfinite(y)) {
      std::ostringstream msg;
      msg << "integrand returned a non-finite value at t = " << to_string(t, 20, true);
      throw QuadratureError(QuadratureError::Kind::kNonFiniteSample, msg.str());
    }
    return y * jac;
  }

  const Integrand& f_;
  std::size_t& evaluations_;
};

struct Panel {
  std::size_t piece;
  DoubleDouble lo, hi;
  PanelSum coarse;
  PanelSum left, right;
  double err;

  DoubleDouble fine() const { return left.value + right.value; }
};

struct PanelOrder {
  bool operator()(const Panel& p, const Panel& q) const {
    if (p.err != q.err) return p.err < q.err;
    if (p.piece != q.piece) return p.piece > q.piece;
    return q.lo < p.lo;
  }
};

Panel make_panel(const Evaluator& ev, const std::vector<Piece>& pieces, std::size_t piece,
                 const DoubleDouble& lo, const DoubleDouble& hi, const PanelSum& coarse) {
  Panel p{piece, lo, hi, coarse, {}, {}, 0.0};
  const DoubleDouble mid = ldexp(lo + hi, -1);
  p.left = ev.panel(pieces[piece], lo, mid);
  p.right = ev.panel(pieces[piece], mid, hi);
  p.err = std::abs((p.coarse.value - p.fine()).to_double());
  return p;
}

QuadratureResult summarize(std::vector<Panel> panels, const SingularityHints& flags) {
  std::sort(panels.begin(), panels.end(), [](const Panel& p, const Panel& q) {
    if (p.piece != q.piece) return p.piece < q.piece;
    return p.lo < q.lo;
  });
  DoubleDouble total = 0.0;
  double err = 0.0;
  double abs_sum = 0.0;
  for (const Panel& p : panels) {
    total += p.fine();
    err += p.err;
    abs_sum += p.left.abs_sum + p.right.abs_sum;
  }
  QuadratureResult r;
  const double rounding = 64.0 * DoubleDouble::epsilon() * abs_sum;
  r.err_estimate = err;
  r.value = ExtReal(total, detail::up(err + rounding));
  r.subdivisions = panels.size();
  r.flags = flags;
  return r;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, const DoubleDouble& a, const DoubleDouble& b,
                           const QuadratureOptions& options) {
  if (!(a < b) || !isfinite(a) || !isfinite(b)) {
    throw QuadratureError(QuadratureError::Kind::kBadInterval, "integrate: requires finite a < b");
  }
  const SingularityHints& h = options.hints;
  std::vector<Piece> pieces;
  if (h.left_log && h.right_log) {
    const DoubleDouble mid = ldexp(a + b, -1);
    pieces.push_back({Map::kLeftSquare, a, mid, 0.0, 1.0});
    pieces.push_back({Map::kRightSquare, mid, b, 0.0, 1.0});
  } else if (h.left_log) {
    pieces.push_back({Map::kLeftSquare, a, b, 0.0, 1.0});
  } else if (h.right_log) {
    pieces.push_back({Map::kRightSquare, a, b, 0.0, 1.0});
  } else {
    pieces.push_back({Map::kIdentity, a, b, a, b});
  }

  std::size_t evaluations = 0;
  const Evaluator ev(f, evaluations);
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
  double err_total = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const PanelSum coarse = ev.panel(pieces[i], pieces[i].u0, pieces[i].u1);
    Panel p = make_panel(ev, pieces, i, pieces[i].u0, pieces[i].u1, coarse);
    err_total += p.err;
    queue.push(p);
  }

  auto drain = [&queue]() {
    std::vector<Panel> all;
    all.reserve(queue.size());
    while (!queue.empty()) {
      all.push_back(queue.top());
      queue.pop();
    }
    return all;
  };

  DoubleDouble running = 0.0;
  {
    auto copy = queue;
    while (!copy.empty()) {
      running += copy.top().fine();
      copy.pop();
    }
  }
  auto exact_error = [&queue]() {
    double e = 0.0;
    auto copy = queue;
    while (!copy.empty()) {
      e += copy.top().err;
      copy.pop();
    }
    return e;
  };
  // The incremental error total loses absolute accuracy relative to its
  // largest past value, so it is recomputed whenever it has shrunk a lot.
  double err_peak = err_total;
  for (;;) {
    const double target = std::max(options.tol, options.rel_tol * std::abs(running.hi()));
    if (err_total <= target || err_total <= 1e-8 * err_peak) {
      err_total = exact_error();
      err_peak = err_total;
      if (err_total <= target) break;
    }
    if (queue.size() >= options.max_panels) {
      QuadratureResult partial = summarize(drain(), h);
      std::ostringstream msg;
      msg << "integrate: panel budget " << options.max_panels << " exhausted with error estimate "
          << partial.err_estimate << " > " << target;
      throw QuadratureError(QuadratureError::Kind::kBudgetExhausted, msg.str(), partial);
    }
    Panel worst = queue.top();
    queue.pop();
    const DoubleDouble mid = ldexp(worst.lo + worst.hi, -1);
    Panel l = make_panel(ev, pieces, worst.piece, worst.lo, mid, worst.left);
    Panel r = make_panel(ev, pieces, worst.piece, mid, worst.hi, worst.right);
    err_total += l.err + r.err - worst.err;
    running += (l.fine() + r.fine()) - worst.fine();
    queue.push(l);
    queue.push(r);
  }
  return summarize(drain(), h);
}

}  // namespace multitrig
