#include "fourierkit/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "fourierkit/error.hpp"

namespace fourierkit {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  Complex value;
  double error;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel gauss_kronrod(const std::function<Complex(double)>& fn, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = fn(center);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex f1 = fn(center - dx);
    const Complex f2 = fn(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

[[noreturn]] void no_convergence(const std::string& why) {
  throw Error(ErrorKind::NoConvergence, why);
}

/// Global adaptive pool: the panel with the largest error is bisected next.
class PanelPool {
 public:
  PanelPool(const std::function<Complex(double)>& fn, std::size_t max_subdivisions)
      : fn_(fn), max_subdivisions_(max_subdivisions) {}

  /// Adds [a, b] split at the interior breakpoints, capped at max_width and
  /// graded around the anchors.
  void add(double a, double b, const std::vector<double>& breakpoints, double max_width,
           const std::vector<double>& anchors) {
    if (!(b > a)) return;
    std::vector<double> cuts{a};
    for (double p : breakpoints) {
      if (p > a && p < b) cuts.push_back(p);
    }
    cuts.push_back(b);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      split(cuts[i], cuts[i + 1], max_width, anchors);
    }
  }

  /// Bisects until the summed error is below target(|value|). Returns false
  /// when no further progress is possible (all remaining panels are at the
  /// resolution limit).
  template <class Target>
  bool refine(Target target) {
    resum();
    while (error_ > target(std::abs(value_))) {
      if (queue_.empty()) return false;
      Panel worst = queue_.top();
      queue_.pop();
      const double mid = 0.5 * (worst.a + worst.b);
      const double scale = std::max({std::abs(worst.a), std::abs(worst.b), 1.0});
      if (worst.b - worst.a < 1e-13 * scale || mid <= worst.a || mid >= worst.b) {
        frozen_.push_back(worst);
        continue;
      }
      if (++subdivisions_ > max_subdivisions_) {
        no_convergence("max_subdivisions exhausted");
      }
      Panel left = gauss_kronrod(fn_, worst.a, mid);
      Panel right = gauss_kronrod(fn_, mid, worst.b);
      value_ += left.value + right.value - worst.value;
      error_ += left.error + right.error - worst.error;
      queue_.push(left);
      queue_.push(right);
      if (subdivisions_ % 4096 == 0) resum();
    }
    resum();
    return true;
  }

  Complex value() const { return value_; }
  double error() const { return error_; }
  std::size_t subdivisions() const { return subdivisions_; }

 private:
  static double distance(double a, double b, const std::vector<double>& anchors) {
    double d = std::numeric_limits<double>::infinity();
    for (double x : anchors) {
      if (x >= a && x <= b) return 0.0;
      d = std::min(d, std::min(std::abs(x - a), std::abs(x - b)));
    }
    return d;
  }

  void split(double lo, double hi, double max_width, const std::vector<double>& anchors) {
    const double graded = std::max(1.0, 0.25 * distance(lo, hi, anchors));
    if (graded < max_width && hi - lo > graded) {
      const double mid = 0.5 * (lo + hi);
      split(lo, mid, max_width, anchors);
      split(mid, hi, max_width, anchors);
      return;
    }
    const auto pieces = static_cast<std::size_t>(
        std::isfinite(max_width) ? std::max(1.0, std::ceil((hi - lo) / max_width)) : 1.0);
    if (pieces > max_subdivisions_) no_convergence("too many initial panels");
    for (std::size_t k = 0; k < pieces; ++k) {
      const double pa = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(pieces);
      const double pb =
          k + 1 == pieces ? hi
                          : lo + (hi - lo) * static_cast<double>(k + 1) / static_cast<double>(pieces);
      push(gauss_kronrod(fn_, pa, pb));
    }
  }

  void push(const Panel& p) {
    value_ += p.value;
    error_ += p.error;
    queue_.push(p);
  }

  // Re-accumulate to shed drift from incremental updates.
  void resum() {
    auto copy = queue_;
    Complex v{};
    double e = 0.0;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().error;
      copy.pop();
    }
    for (const auto& p : frozen_) {
      v += p.value;
      e += p.error;
    }
    value_ = v;
    error_ = e;
  }

  const std::function<Complex(double)>& fn_;
  std::size_t max_subdivisions_;
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue_;
  std::vector<Panel> frozen_;
  Complex value_{};
  double error_ = 0.0;
  std::size_t subdivisions_ = 0;
};

double panel_cap(double oscillation) {
  return oscillation > 0.0 ? std::numbers::pi / oscillation
                           : std::numeric_limits<double>::infinity();
}

// L1 mass of the integrand over [a, b]; only used as an estimate, so the
// tolerance is loose.
double shell_mass(const Integrand& g, double a, double b, const QuadratureConfig& cfg) {
  if (!(b > a)) return 0.0;
  std::function<Complex(double)> mag = [&](double t) { return Complex{std::abs(g.fn(t)), 0.0}; };
  PanelPool pool(mag, cfg.max_subdivisions);
  pool.add(a, b, g.breakpoints, panel_cap(g.oscillation), g.anchors);
  pool.refine([&](double v) { return 1e-6 * v + cfg.abs_tol; });
  return pool.value().real();
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw Error(ErrorKind::ConstraintViolation, "quadrature tolerances must be > 0");
  }
  if (!(initial_half_width > 0.0) || !(initial_half_width <= max_half_width)) {
    throw Error(ErrorKind::ConstraintViolation,
                "initial_half_width must be positive and <= max_half_width");
  }
  if (max_subdivisions == 0) {
    throw Error(ErrorKind::ConstraintViolation, "max_subdivisions must be positive");
  }
}

QuadratureResult proper_integral(const Integrand& g, double a, double b,
                                 const QuadratureConfig& cfg) {
  cfg.validate();
  const double lo = std::max(a, g.lo);
  const double hi = std::min(b, g.hi);
  const auto tol = [&](double v) { return cfg.rel_tol * v + cfg.abs_tol; };

  PanelPool pool(g.fn, cfg.max_subdivisions);
  pool.add(lo, hi, g.breakpoints, panel_cap(g.oscillation), g.anchors);
  pool.refine(tol);
  if (pool.error() > tol(std::abs(pool.value()))) {
    no_convergence("error estimate stalled above tolerance on [" + std::to_string(a) + ", " +
                   std::to_string(b) + "]");
  }
  QuadratureResult r;
  r.value = pool.value();
  r.error_estimate = pool.error();
  r.tail_bound = 0.0;
  r.truncation_T = std::max(std::abs(a), std::abs(b));
  r.subdivisions = pool.subdivisions();
  return r;
}

QuadratureResult improper_integral(const Integrand& g, const QuadratureConfig& cfg) {
  cfg.validate();
  const auto tol = [&](double v) { return cfg.rel_tol * v + cfg.abs_tol; };
  const auto half_tol = [&](double v) { return 0.5 * tol(v); };
  const double cap = panel_cap(g.oscillation);

  const bool bounded = std::isfinite(g.lo) && std::isfinite(g.hi);
  PanelPool pool(g.fn, cfg.max_subdivisions);

  if (bounded) {
    pool.add(g.lo, g.hi, g.breakpoints, cap, g.anchors);
    pool.refine(tol);
    if (pool.error() > tol(std::abs(pool.value()))) {
      no_convergence("error estimate stalled above tolerance");
    }
    QuadratureResult r;
    r.value = pool.value();
    r.error_estimate = pool.error();
    r.truncation_T = std::max(std::abs(g.lo), std::abs(g.hi));
    r.subdivisions = pool.subdivisions();
    return r;
  }

  auto analytic_tail = [&](double T) -> std::optional<double> {
    if (!g.tail_bound) return std::nullopt;
    return g.tail_bound(T);
  };

  double T = cfg.initial_half_width;
  pool.add(std::max(g.lo, -T), std::min(g.hi, T), g.breakpoints, cap, g.anchors);
  double empirical = std::numeric_limits<double>::infinity();
  bool analytic = true;

  for (;;) {
    const bool progressed = pool.refine(half_tol);
    const double v = std::abs(pool.value());
    double tail;
    if (auto bound = analytic_tail(T)) {
      tail = *bound;
      analytic = true;
    } else {
      tail = empirical;
      analytic = false;
    }
    if (pool.error() + tail <= tol(v)) {
      QuadratureResult r;
      r.value = pool.value();
      r.error_estimate = pool.error();
      r.tail_bound = tail;
      r.truncation_T = T;
      r.subdivisions = pool.subdivisions();
      r.tail_is_analytic = analytic;
      return r;
    }
    if (!progressed && pool.error() > half_tol(v)) {
      no_convergence("error estimate stalled above tolerance");
    }
    const auto floor = analytic_tail(cfg.max_half_width);
    if (2.0 * T > cfg.max_half_width ||
        (floor && *floor > tol(v + pool.error() + tail))) {
      no_convergence("tail did not decay within max_half_width = " +
                     std::to_string(cfg.max_half_width) +
                     " (integrand not absolutely integrable or decaying too slowly)");
    }
    // Extend the domain by the shells [T, 2T] and [-2T, -T].
    const double left_a = std::max(g.lo, -2.0 * T);
    const double left_b = std::min(g.hi, -T);
    const double right_a = std::max(g.lo, T);
    const double right_b = std::min(g.hi, 2.0 * T);
    pool.add(left_a, left_b, g.breakpoints, cap, g.anchors);
    pool.add(right_a, right_b, g.breakpoints, cap, g.anchors);
    if (!analytic_tail(2.0 * T)) {
      empirical = shell_mass(g, left_a, left_b, cfg) + shell_mass(g, right_a, right_b, cfg);
    }
    T *= 2.0;
  }
}

}  // namespace fourierkit
