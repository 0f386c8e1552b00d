#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace fourierkit {

using Complex = std::complex<double>;

/// sum_k out[k] y^(k)(t) = sum_k in[k] x^(k)(t)
struct DiffEqSystem {
  std::vector<double> out_coeffs;  // beta_0 .. beta_n
  std::vector<double> in_coeffs;   // alpha_0 .. alpha_m
  std::string name;                // optional label for reports

  int n() const { return static_cast<int>(out_coeffs.size()) - 1; }
  int m() const { return static_cast<int>(in_coeffs.size()) - 1; }

  /// Throws Error(InvalidSystem) unless m <= n, beta_n != 0, alpha_m != 0
  /// (for m > 0) and every coefficient is finite.
  void validate() const;
};

/// H(w) = sum alpha_k (iw)^k / sum beta_k (iw)^k, ascending powers.
struct RationalResponse {
  std::vector<Complex> numerator;
  std::vector<Complex> denominator;
};

RationalResponse derive_freq_response(const DiffEqSystem& sys);

/// Throws Error(ExcludedPoint) where the denominator vanishes.
Complex eval_freq_response(const RationalResponse& H, double omega);

/// Value of sum c_k s^k by Horner's rule.
Complex eval_polynomial(const std::vector<Complex>& coeffs, Complex s);

struct Pole {
  Complex value;
  int multiplicity = 1;
};

struct PoleSet {
  std::vector<Pole> poles;
  bool stable = true;  // every pole strictly in the left half-plane

  int count() const;
  /// Largest modulus, 0 when there are no poles.
  double max_modulus() const;
  /// Smallest |Re|, +inf when there are no poles.
  double slowest_decay() const;
};

/// Roots of the denominator in s. Degrees 1 and 2 are solved in closed form,
/// higher degrees by simultaneous (Durand-Kerner) iteration. Throws
/// Error(RootFindingFailure) if a root misses the residual tolerance.
PoleSet poles(const RationalResponse& H);

/// "bandpass"(wc), "lowpass"(wc), "highpass"(wc), "mems"(K, D, M). Throws
/// Error(ConstraintViolation) for non-positive parameters and Error(Usage) for
/// unknown names or parameters.
DiffEqSystem builtin_system(const std::string& name, const std::map<std::string, double>& params);

/// wc/(iw + wc) * iw/(iw + wc), the factored bandpass response.
Complex bandpass_factored(double wc, double omega);

}  // namespace fourierkit
