#include "fourierkit/lti.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fourierkit/error.hpp"
#include "fourierkit/format.hpp"

namespace fourierkit {

void DiffEqSystem::validate() const {
  auto invalid = [](const std::string& why) { throw Error(ErrorKind::InvalidSystem, why); };
  if (out_coeffs.empty()) invalid("output coefficient list is empty");
  if (in_coeffs.empty()) invalid("input coefficient list is empty");
  for (double v : out_coeffs) {
    if (!std::isfinite(v)) invalid("output coefficients must be finite");
  }
  for (double v : in_coeffs) {
    if (!std::isfinite(v)) invalid("input coefficients must be finite");
  }
  if (m() > n()) {
    invalid("input order m = " + std::to_string(m()) + " exceeds output order n = " +
            std::to_string(n()) + " (need m <= n)");
  }
  if (out_coeffs.back() == 0.0) invalid("leading output coefficient beta_n must be nonzero");
  if (m() > 0 && in_coeffs.back() == 0.0) {
    invalid("leading input coefficient alpha_m must be nonzero");
  }
}

RationalResponse derive_freq_response(const DiffEqSystem& sys) {
  sys.validate();
  RationalResponse H;
  H.numerator.assign(sys.in_coeffs.begin(), sys.in_coeffs.end());
  H.denominator.assign(sys.out_coeffs.begin(), sys.out_coeffs.end());
  return H;
}

Complex eval_polynomial(const std::vector<Complex>& coeffs, Complex s) {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Complex eval_freq_response(const RationalResponse& H, double omega) {
  const Complex s{0.0, omega};
  const Complex den = eval_polynomial(H.denominator, s);
  if (den == Complex{}) {
    throw Error(ErrorKind::ExcludedPoint,
                "denominator of H vanishes at w = " + format_number(omega));
  }
  return eval_polynomial(H.numerator, s) / den;
}

int PoleSet::count() const {
  int total = 0;
  for (const auto& p : poles) total += p.multiplicity;
  return total;
}

double PoleSet::max_modulus() const {
  double m = 0.0;
  for (const auto& p : poles) m = std::max(m, std::abs(p.value));
  return m;
}

double PoleSet::slowest_decay() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& p : poles) m = std::min(m, std::abs(p.value.real()));
  return m;
}

namespace {

std::vector<Complex> trimmed(std::vector<Complex> c) {
  while (!c.empty() && c.back() == Complex{}) c.pop_back();
  return c;
}

std::vector<Complex> quadratic_roots(Complex a, Complex b, Complex c) {
  const Complex root = std::sqrt(b * b - 4.0 * a * c);
  // Pick the sign that avoids cancellation.
  const Complex q = std::real(std::conj(b) * root) >= 0.0 ? -0.5 * (b + root) : -0.5 * (b - root);
  if (q == Complex{}) return {Complex{}, Complex{}};
  return {q / a, c / q};
}

std::vector<Complex> durand_kerner(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<Complex> monic(c.size());
  for (std::size_t k = 0; k <= n; ++k) monic[k] = c[k] / c[n];
  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(monic[k]));
  radius += 1.0;

  std::vector<Complex> z(n);
  const Complex seed{0.4, 0.9};
  Complex power{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = radius * power;
    power *= seed;
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex denom{1.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (denom == Complex{}) denom = Complex{1e-300, 0.0};
      const Complex step = eval_polynomial(monic, z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (change < 1e-15) break;
  }
  return z;
}

}  // namespace

PoleSet poles(const RationalResponse& H) {
  const auto c = trimmed(H.denominator);
  if (c.empty()) throw Error(ErrorKind::InvalidSystem, "denominator is identically zero");
  const std::size_t degree = c.size() - 1;

  std::vector<Complex> roots;
  if (degree == 1) {
    roots = {-c[0] / c[1]};
  } else if (degree == 2) {
    roots = quadratic_roots(c[2], c[1], c[0]);
  } else if (degree > 2) {
    roots = durand_kerner(c);
  }

  for (const Complex& r : roots) {
    double scale = 0.0;
    for (std::size_t k = 0; k <= degree; ++k) {
      scale += std::abs(c[k]) * std::pow(std::abs(r), static_cast<double>(k));
    }
    if (!(std::abs(eval_polynomial(c, r)) <= 1e-8 * scale)) {
      throw Error(ErrorKind::RootFindingFailure,
                  "root " + format_complex(r) + " misses the residual tolerance");
    }
  }

  // Repeated roots come back as tight clusters; merge them.
  std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  PoleSet set;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Complex sum = roots[i];
    int count = 1;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) <= 1e-6 * std::max(1.0, std::abs(roots[i]))) {
        used[j] = true;
        sum += roots[j];
        ++count;
      }
    }
    Complex value = sum / static_cast<double>(count);
    if (std::abs(value.imag()) <= 1e-14 * std::max(1.0, std::abs(value))) value.imag(0.0);
    set.poles.push_back(Pole{value, count});
    if (!(value.real() < 0.0)) set.stable = false;
  }
  return set;
}

DiffEqSystem builtin_system(const std::string& name, const std::map<std::string, double>& params) {
  auto positive = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) {
      throw Error(ErrorKind::Usage, "builtin '" + name + "' needs parameter " + key);
    }
    if (!(it->second > 0.0) || !std::isfinite(it->second)) {
      throw Error(ErrorKind::ConstraintViolation,
                  key + " must be > 0 (got " + format_number(it->second) + ")");
    }
    return it->second;
  };
  auto only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [key, value] : params) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
        throw Error(ErrorKind::Usage, "builtin '" + name + "' has no parameter " + key);
      }
    }
  };

  DiffEqSystem sys;
  if (name == "bandpass" || name == "lowpass" || name == "highpass") {
    only({"wc"});
    const double wc = positive("wc");
    if (name == "bandpass") {
      sys.out_coeffs = {wc * wc, 2.0 * wc, 1.0};
      sys.in_coeffs = {0.0, wc};
    } else if (name == "lowpass") {
      sys.out_coeffs = {wc, 1.0};
      sys.in_coeffs = {wc};
    } else {
      sys.out_coeffs = {wc, 1.0};
      sys.in_coeffs = {0.0, 1.0};
    }
    sys.name = name + "(wc=" + format_number(wc) + ")";
  } else if (name == "mems") {
    only({"K", "D", "M"});
    const double K = positive("K");
    const double D = positive("D");
    const double M = positive("M");
    sys.out_coeffs = {K / M, D / M, 1.0};
    sys.in_coeffs = {1.0};
    sys.name = "mems(K=" + format_number(K) + ",D=" + format_number(D) + ",M=" + format_number(M) + ")";
  } else {
    throw Error(ErrorKind::Usage,
                "unknown builtin system '" + name + "' (expected bandpass, lowpass, highpass, mems)");
  }
  sys.validate();
  return sys;
}

Complex bandpass_factored(double wc, double omega) {
  const Complex iw{0.0, omega};
  return wc / (iw + wc) * (iw / (iw + wc));
}

}  // namespace fourierkit
