#include "fourierkit/spectrum.hpp"

#include <cmath>
#include <sstream>

#include "fourierkit/error.hpp"
#include "fourierkit/format.hpp"

namespace fourierkit {

namespace {

// Affine substitution w -> w / divisor + shift.
struct AffineMap {
  double divisor = 1.0;
  double shift = 0.0;
};

bool is_const(const Spectrum& s) { return s.kind() == SpectrumKind::Const; }
bool is_const(const Spectrum& s, Complex c) { return is_const(s) && s.node().value == c; }
Complex const_of(const Spectrum& s) { return s.node().value; }

const Spectrum& lhs(const Spectrum& s) { return *s.node().lhs; }
const Spectrum& rhs(const Spectrum& s) { return *s.node().rhs; }

// Splits c * rest; a term without a leading constant has coefficient 1.
std::pair<Complex, Spectrum> split_coefficient(const Spectrum& s) {
  if (s.kind() == SpectrumKind::Mul && is_const(lhs(s))) return {const_of(lhs(s)), rhs(s)};
  return {Complex{1.0, 0.0}, s};
}

Complex ipow(Complex base, int n) {
  Complex result{1.0, 0.0};
  const bool invert = n < 0;
  unsigned k = static_cast<unsigned>(invert ? -n : n);
  while (k != 0) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return invert ? Complex{1.0, 0.0} / result : result;
}

double sinc_value(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

Spectrum mul_rule(const Spectrum& x, const Spectrum& y);
Spectrum add_rule(const Spectrum& x, const Spectrum& y);
Spectrum sub_rule(const Spectrum& x, const Spectrum& y);

Spectrum mul_rule(const Spectrum& x, const Spectrum& y) {
  if (is_const(x) && is_const(y)) return Spectrum::constant(const_of(x) * const_of(y));
  if (is_const(x, 0.0) || is_const(y, 0.0)) return Spectrum::constant(0.0);
  if (is_const(x, 1.0)) return y;
  if (is_const(y, 1.0)) return x;
  if (is_const(y)) return mul_rule(y, x);
  auto [cx, rx] = split_coefficient(x);
  auto [cy, ry] = split_coefficient(y);
  if (cx == Complex{1.0} && cy == Complex{1.0}) return Spectrum::mul(x, y);
  if (is_const(x)) {
    // c * (d * r) -> (c d) * r
    return mul_rule(Spectrum::constant(const_of(x) * cy), ry);
  }
  return mul_rule(Spectrum::constant(cx * cy), Spectrum::mul(rx, ry));
}

Spectrum add_rule(const Spectrum& x, const Spectrum& y) {
  if (is_const(x) && is_const(y)) return Spectrum::constant(const_of(x) + const_of(y));
  if (is_const(x, 0.0)) return y;
  if (is_const(y, 0.0)) return x;
  auto [cx, rx] = split_coefficient(x);
  auto [cy, ry] = split_coefficient(y);
  if (structurally_equal(rx, ry, 0.0)) return mul_rule(Spectrum::constant(cx + cy), rx);
  if (cx == cy && cx != Complex{1.0}) return mul_rule(Spectrum::constant(cx), Spectrum::add(rx, ry));
  return Spectrum::add(x, y);
}

Spectrum sub_rule(const Spectrum& x, const Spectrum& y) {
  if (is_const(x) && is_const(y)) return Spectrum::constant(const_of(x) - const_of(y));
  if (is_const(y, 0.0)) return x;
  if (is_const(x, 0.0)) return mul_rule(Spectrum::constant(-1.0), y);
  auto [cx, rx] = split_coefficient(x);
  auto [cy, ry] = split_coefficient(y);
  if (structurally_equal(rx, ry, 0.0)) return mul_rule(Spectrum::constant(cx - cy), rx);
  if (cx == cy && cx != Complex{1.0}) return mul_rule(Spectrum::constant(cx), Spectrum::sub(rx, ry));
  return Spectrum::sub(x, y);
}

Spectrum div_rule(const Spectrum& x, const Spectrum& y, const std::string& condition) {
  if (is_const(y) && const_of(y) != Complex{}) {
    return mul_rule(Spectrum::constant(Complex{1.0} / const_of(y)), x);
  }
  if (is_const(x, 0.0)) return x;
  auto [cx, rx] = split_coefficient(x);
  if (cx != Complex{1.0}) {
    return mul_rule(Spectrum::constant(cx), Spectrum::div(rx, y, condition));
  }
  return Spectrum::div(x, y, condition);
}

Spectrum pow_rule(const Spectrum& x, int n) {
  if (n == 0) return Spectrum::constant(1.0);
  if (n == 1) return x;
  if (is_const(x)) return Spectrum::constant(ipow(const_of(x), n));
  return Spectrum::pow(x, n);
}

Spectrum cexp_rule(const Spectrum& x) {
  if (is_const(x)) return Spectrum::constant(std::exp(const_of(x)));
  return Spectrum::cexp(x);
}

// Rewrites the (already simplified) expression with w replaced by the map.
Spectrum substitute(const Spectrum& s, AffineMap m) {
  const auto& n = s.node();
  auto remap = [&](double p, double q) {
    // p * (w / divisor + shift) + q
    return std::pair{p / m.divisor, p * m.shift + q};
  };
  switch (n.kind) {
    case SpectrumKind::Const:
      return s;
    case SpectrumKind::Omega: {
      auto [p, q] = remap(n.p, n.q);
      return Spectrum::omega(p, q);
    }
    case SpectrumKind::IOmega: {
      auto [p, q] = remap(n.p, n.q);
      return Spectrum::i_omega(p, q);
    }
    case SpectrumKind::Sinc: {
      auto [p, q] = remap(n.p, n.q);
      return Spectrum::sinc(n.width, p, q);
    }
    case SpectrumKind::Add:
      return add_rule(substitute(*n.lhs, m), substitute(*n.rhs, m));
    case SpectrumKind::Sub:
      return sub_rule(substitute(*n.lhs, m), substitute(*n.rhs, m));
    case SpectrumKind::Mul:
      return mul_rule(substitute(*n.lhs, m), substitute(*n.rhs, m));
    case SpectrumKind::Div:
      return div_rule(substitute(*n.lhs, m), substitute(*n.rhs, m), n.condition);
    case SpectrumKind::Pow:
      return pow_rule(substitute(*n.lhs, m), n.exponent);
    case SpectrumKind::CExp:
      return cexp_rule(substitute(*n.lhs, m));
    case SpectrumKind::SubstShift:
    case SpectrumKind::SubstScale:
      // simplify() removes these before substituting.
      return substitute(simplify(s), m);
  }
  return s;
}

bool close(double a, double b, double rel_tol) {
  if (a == b) return true;
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

bool close(Complex a, Complex b, double rel_tol) {
  if (a == b) return true;
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

std::string affine_text(double p, double q) {
  std::string out;
  if (p == 1.0) {
    out = "w";
  } else if (p == -1.0) {
    out = "-w";
  } else {
    out = format_number(p) + "*w";
  }
  if (q > 0.0) out += " + " + format_number(q);
  if (q < 0.0) out += " - " + format_number(-q);
  return out;
}

void render(const Spectrum& s, std::ostringstream& os) {
  const auto& n = s.node();
  switch (n.kind) {
    case SpectrumKind::Const:
      os << format_complex(n.value);
      break;
    case SpectrumKind::Omega:
      if (n.p == 1.0 && n.q == 0.0) {
        os << "w";
      } else {
        os << "(" << affine_text(n.p, n.q) << ")";
      }
      break;
    case SpectrumKind::IOmega:
      if (n.p == 1.0 && n.q == 0.0) {
        os << "i*w";
      } else {
        os << "i*(" << affine_text(n.p, n.q) << ")";
      }
      break;
    case SpectrumKind::Sinc:
      os << "sinc[" << format_number(n.width) << "](" << affine_text(n.p, n.q) << ")";
      break;
    case SpectrumKind::Add:
      os << "(";
      render(*n.lhs, os);
      os << " + ";
      render(*n.rhs, os);
      os << ")";
      break;
    case SpectrumKind::Sub:
      os << "(";
      render(*n.lhs, os);
      os << " - ";
      render(*n.rhs, os);
      os << ")";
      break;
    case SpectrumKind::Mul:
      render(*n.lhs, os);
      os << "*";
      render(*n.rhs, os);
      break;
    case SpectrumKind::Div:
      render(*n.lhs, os);
      os << "/(";
      render(*n.rhs, os);
      os << ")";
      break;
    case SpectrumKind::Pow:
      os << "(";
      render(*n.lhs, os);
      os << ")^" << n.exponent;
      break;
    case SpectrumKind::CExp:
      os << "exp(";
      render(*n.lhs, os);
      os << ")";
      break;
    case SpectrumKind::SubstShift:
      os << "[";
      render(*n.lhs, os);
      os << "](w - " << format_number(n.param) << ")";
      break;
    case SpectrumKind::SubstScale:
      os << "[";
      render(*n.lhs, os);
      os << "](w / " << format_number(n.param) << ")";
      break;
  }
}

}  // namespace

Spectrum Spectrum::constant(Complex c) {
  SpectrumNode n;
  n.kind = SpectrumKind::Const;
  n.value = c;
  return Spectrum(std::make_shared<const SpectrumNode>(std::move(n)));
}

Spectrum Spectrum::omega(double p, double q) {
  SpectrumNode n;
  n.kind = SpectrumKind::Omega;
  n.p = p;
  n.q = q;
  return Spectrum(std::make_shared<const SpectrumNode>(std::move(n)));
}

Spectrum Spectrum::i_omega(double p, double q) {
  SpectrumNode n;
  n.kind = SpectrumKind::IOmega;
  n.p = p;
  n.q = q;
  return Spectrum(std::make_shared<const SpectrumNode>(std::move(n)));
}

Spectrum Spectrum::sinc(double width, double p, double q) {
  SpectrumNode n;
  n.kind = SpectrumKind::Sinc;
  n.width = width;
  n.p = p;
  n.q = q;
  return Spectrum(std::make_shared<const SpectrumNode>(std::move(n)));
}

namespace {
SpectrumNode binary(SpectrumKind kind, Spectrum lhs, Spectrum rhs) {
  SpectrumNode n;
  n.kind = kind;
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return n;
}
SpectrumNode unary(SpectrumKind kind, Spectrum operand) {
  SpectrumNode n;
  n.kind = kind;
  n.lhs = std::move(operand);
  return n;
}
}  // namespace

Spectrum Spectrum::add(Spectrum lhs, Spectrum rhs) {
  return Spectrum(std::make_shared<const SpectrumNode>(
      binary(SpectrumKind::Add, std::move(lhs), std::move(rhs))));
}

Spectrum Spectrum::sub(Spectrum lhs, Spectrum rhs) {
  return Spectrum(std::make_shared<const SpectrumNode>(
      binary(SpectrumKind::Sub, std::move(lhs), std::move(rhs))));
}

Spectrum Spectrum::mul(Spectrum lhs, Spectrum rhs) {
  return Spectrum(std::make_shared<const SpectrumNode>(
      binary(SpectrumKind::Mul, std::move(lhs), std::move(rhs))));
}

Spectrum Spectrum::div(Spectrum num, Spectrum den, std::string condition) {
  auto n = binary(SpectrumKind::Div, std::move(num), std::move(den));
  n.condition = std::move(condition);
  return Spectrum(std::make_shared<const SpectrumNode>(std::move(n)));
}

Spectrum Spectrum::pow(Spectrum base, int exponent) {
  auto n = unary(SpectrumKind::Pow, std::move(base));
  n.exponent = exponent;
  return Spectrum(std::make_shared<const SpectrumNode>(std::move(n)));
}

Spectrum Spectrum::cexp(Spectrum arg) {
  return Spectrum(std::make_shared<const SpectrumNode>(unary(SpectrumKind::CExp, std::move(arg))));
}

Spectrum Spectrum::subst_shift(Spectrum inner, double shift) {
  auto n = unary(SpectrumKind::SubstShift, std::move(inner));
  n.param = shift;
  return Spectrum(std::make_shared<const SpectrumNode>(std::move(n)));
}

Spectrum Spectrum::subst_scale(Spectrum inner, double scale) {
  if (scale == 0.0) {
    throw Error(ErrorKind::ConstraintViolation, "frequency substitution scale must be nonzero");
  }
  auto n = unary(SpectrumKind::SubstScale, std::move(inner));
  n.param = scale;
  return Spectrum(std::make_shared<const SpectrumNode>(std::move(n)));
}

SpectrumKind Spectrum::kind() const { return node_->kind; }

Complex spectrum_eval(const Spectrum& F, double omega) {
  const auto& n = F.node();
  switch (n.kind) {
    case SpectrumKind::Const:
      return n.value;
    case SpectrumKind::Omega:
      return n.p * omega + n.q;
    case SpectrumKind::IOmega:
      return Complex{0.0, n.p * omega + n.q};
    case SpectrumKind::Sinc:
      return sinc_value(n.width * (n.p * omega + n.q));
    case SpectrumKind::Add:
      return spectrum_eval(*n.lhs, omega) + spectrum_eval(*n.rhs, omega);
    case SpectrumKind::Sub:
      return spectrum_eval(*n.lhs, omega) - spectrum_eval(*n.rhs, omega);
    case SpectrumKind::Mul:
      return spectrum_eval(*n.lhs, omega) * spectrum_eval(*n.rhs, omega);
    case SpectrumKind::Div: {
      const Complex den = spectrum_eval(*n.rhs, omega);
      if (den == Complex{}) {
        throw Error(ErrorKind::ExcludedPoint, "w = " + format_number(omega) +
                                                  " violates side condition " + n.condition);
      }
      return spectrum_eval(*n.lhs, omega) / den;
    }
    case SpectrumKind::Pow:
      return ipow(spectrum_eval(*n.lhs, omega), n.exponent);
    case SpectrumKind::CExp:
      return std::exp(spectrum_eval(*n.lhs, omega));
    case SpectrumKind::SubstShift:
      return spectrum_eval(*n.lhs, omega - n.param);
    case SpectrumKind::SubstScale:
      return spectrum_eval(*n.lhs, omega / n.param);
  }
  return {};
}

Spectrum simplify(const Spectrum& F) {
  const auto& n = F.node();
  switch (n.kind) {
    case SpectrumKind::Const:
    case SpectrumKind::Omega:
    case SpectrumKind::IOmega:
    case SpectrumKind::Sinc:
      return F;
    case SpectrumKind::Add:
      return add_rule(simplify(*n.lhs), simplify(*n.rhs));
    case SpectrumKind::Sub:
      return sub_rule(simplify(*n.lhs), simplify(*n.rhs));
    case SpectrumKind::Mul:
      return mul_rule(simplify(*n.lhs), simplify(*n.rhs));
    case SpectrumKind::Div:
      return div_rule(simplify(*n.lhs), simplify(*n.rhs), n.condition);
    case SpectrumKind::Pow:
      return pow_rule(simplify(*n.lhs), n.exponent);
    case SpectrumKind::CExp:
      return cexp_rule(simplify(*n.lhs));
    case SpectrumKind::SubstShift:
      return substitute(simplify(*n.lhs), AffineMap{1.0, -n.param});
    case SpectrumKind::SubstScale:
      return substitute(simplify(*n.lhs), AffineMap{n.param, 0.0});
  }
  return F;
}

bool structurally_equal(const Spectrum& a, const Spectrum& b, double rel_tol) {
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case SpectrumKind::Const:
      return close(x.value, y.value, rel_tol);
    case SpectrumKind::Omega:
    case SpectrumKind::IOmega:
      return close(x.p, y.p, rel_tol) && close(x.q, y.q, rel_tol);
    case SpectrumKind::Sinc:
      return close(x.width, y.width, rel_tol) && close(x.p, y.p, rel_tol) &&
             close(x.q, y.q, rel_tol);
    case SpectrumKind::Add:
    case SpectrumKind::Sub:
    case SpectrumKind::Mul:
    case SpectrumKind::Div:
      return structurally_equal(*x.lhs, *y.lhs, rel_tol) &&
             structurally_equal(*x.rhs, *y.rhs, rel_tol);
    case SpectrumKind::Pow:
      return x.exponent == y.exponent && structurally_equal(*x.lhs, *y.lhs, rel_tol);
    case SpectrumKind::CExp:
      return structurally_equal(*x.lhs, *y.lhs, rel_tol);
    case SpectrumKind::SubstShift:
    case SpectrumKind::SubstScale:
      return close(x.param, y.param, rel_tol) && structurally_equal(*x.lhs, *y.lhs, rel_tol);
  }
  return false;
}

std::string to_string(const Spectrum& F) {
  std::ostringstream os;
  render(F, os);
  return os.str();
}

}  // namespace fourierkit
