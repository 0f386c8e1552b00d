#include "fourierkit/symbolic_ft.hpp"

#include <cmath>
#include <numbers>

#include "fourierkit/error.hpp"
#include "overloaded.hpp"

namespace fourierkit {

namespace {

Spectrum k(Complex c) { return Spectrum::constant(c); }

Spectrum unilat_denominator(double c) { return k(c) + Spectrum::i_omega(); }

}  // namespace

Spectrum primitive_spectrum(const Primitive& p) {
  const double T1 = p.width;
  const double c = p.rate;
  const double w0 = p.carrier;
  switch (p.kind) {
    case PrimitiveKind::RectPulse:
      return k(2.0 * T1) * Spectrum::sinc(T1);
    case PrimitiveKind::UnilatNegExp:
      return Spectrum::div(k(1.0), unilat_denominator(c), "c + i*w != 0");
    case PrimitiveKind::BilateralExp:
      return Spectrum::div(k(2.0), k(1.0) + Spectrum::pow(Spectrum::omega(), 2), "1 + w^2 != 0");
    case PrimitiveKind::SineToneBurst:
      return k(Complex{0.0, -T1}) *
             (Spectrum::sinc(T1, 1.0, -w0) - Spectrum::sinc(T1, 1.0, w0));
    case PrimitiveKind::DampedUnilatSine:
      return Spectrum::div(k(w0),
                           Spectrum::pow(unilat_denominator(c), 2) + k(w0 * w0),
                           "(c + i*w)^2 + w0^2 != 0");
    case PrimitiveKind::Gaussian:
      return k(std::sqrt(std::numbers::pi)) *
             Spectrum::cexp(k(-0.25) * Spectrum::pow(Spectrum::omega(), 2));
  }
  return k(0.0);
}

namespace {

Spectrum raw_ft(const Signal& f) {
  return std::visit(
      detail::Overloaded{
          [](const Primitive& p) { return primitive_spectrum(p); },
          [](const LinComb& n) { return k(n.a) * raw_ft(n.f) + k(n.b) * raw_ft(n.g); },
          [](const TimeShift& n) {
            return raw_ft(n.f) * Spectrum::cexp(Spectrum::i_omega(-n.t0));
          },
          [](const FreqShiftExp& n) {
            const double shift = n.sign == ShiftSign::Plus ? n.omega0 : -n.omega0;
            return Spectrum::subst_shift(raw_ft(n.f), shift);
          },
          [](const ModCos& n) {
            const Spectrum F = raw_ft(n.f);
            return Spectrum::div(Spectrum::subst_shift(F, n.omega0) +
                                     Spectrum::subst_shift(F, -n.omega0),
                                 k(2.0), "2 != 0");
          },
          [](const ModSin& n) {
            const Spectrum F = raw_ft(n.f);
            return Spectrum::div(Spectrum::subst_shift(F, n.omega0) -
                                     Spectrum::subst_shift(F, -n.omega0),
                                 k(Complex{0.0, 2.0}), "2i != 0");
          },
          [](const TimeScale& n) {
            return k(1.0 / std::abs(n.a)) * Spectrum::subst_scale(raw_ft(n.f), n.a);
          },
          [](const TimeReverse& n) { return Spectrum::subst_scale(raw_ft(n.f), -1.0); },
          [](const Derivative& n) {
            return Spectrum::pow(Spectrum::i_omega(), n.order) * raw_ft(n.f);
          },
      },
      f.node().variant());
}

}  // namespace

Spectrum symbolic_ft(const Signal& f) {
  if (!f.meta().abs_integrable) {
    throw Error(ErrorKind::ExistenceViolation, "signal is not absolutely integrable");
  }
  return simplify(raw_ft(f));
}

Complex area_under(const Signal& f) { return spectrum_eval(symbolic_ft(f), 0.0); }

std::string_view theorem_name(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::RectPulse:
      return "Fourier Transform of Rectangular Pulse";
    case PrimitiveKind::UnilatNegExp:
      return "Fourier Transform of Unilateral Negative Exponential";
    case PrimitiveKind::BilateralExp:
      return "Fourier Transform of Bilateral Exponential";
    case PrimitiveKind::SineToneBurst:
      return "Fourier Transform of Sine Tone-Burst";
    case PrimitiveKind::DampedUnilatSine:
      return "Fourier Transform of Damped Unilateral Sinusoid";
    case PrimitiveKind::Gaussian:
      return "Fourier Transform of Gaussian (oracle-validated only)";
  }
  return "";
}

std::string_view closed_form_text(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::RectPulse:
      return "2*T1*sinc(w*T1), sinc(x) = sin(x)/x";
    case PrimitiveKind::UnilatNegExp:
      return "1/(c + i*w)";
    case PrimitiveKind::BilateralExp:
      return "2/(1 + w^2)";
    case PrimitiveKind::SineToneBurst:
      return "-i*T1*(sinc((w - w0)*T1) - sinc((w + w0)*T1))";
    case PrimitiveKind::DampedUnilatSine:
      return "w0/((c + i*w)^2 + w0^2)";
    case PrimitiveKind::Gaussian:
      return "sqrt(pi)*exp(-w^2/4)";
  }
  return "";
}

std::string_view rule_name(const Signal& f) {
  return std::visit(
      detail::Overloaded{
          [](const Primitive& p) { return theorem_name(p.kind); },
          [](const LinComb&) { return std::string_view{"Linearity"}; },
          [](const TimeShift&) { return std::string_view{"Time Shifting"}; },
          [](const FreqShiftExp&) { return std::string_view{"Frequency Shifting"}; },
          [](const ModCos&) { return std::string_view{"Cosine Based Modulation"}; },
          [](const ModSin&) { return std::string_view{"Sine Based Modulation"}; },
          [](const TimeScale&) { return std::string_view{"Time Scaling"}; },
          [](const TimeReverse&) { return std::string_view{"Time Reversal"}; },
          [](const Derivative& d) {
            return std::string_view{d.order == 1 ? "First-order Differentiation"
                                                 : "Higher-order Differentiation"};
          },
      },
      f.node().variant());
}

bool oracle_validated_only(const Signal& f) {
  return std::visit(
      detail::Overloaded{
          [](const Primitive& p) { return p.kind == PrimitiveKind::Gaussian; },
          [](const LinComb& n) { return oracle_validated_only(n.f) || oracle_validated_only(n.g); },
          [](const auto& n) { return oracle_validated_only(n.f); },
      },
      f.node().variant());
}

}  // namespace fourierkit
