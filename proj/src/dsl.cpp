#include "fourierkit/dsl.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourierkit/error.hpp"
#include "fourierkit/format.hpp"
#include "overloaded.hpp"

namespace fourierkit {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  /// Optionally signed decimal with fraction and exponent.
  std::optional<double> number() {
    skip_space();
    std::size_t p = pos_;
    if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
    const std::size_t digits_start = p;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    if (p < text_.size() && text_[p] == '.') {
      ++p;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    }
    if (p == digits_start || (p == digits_start + 1 && text_[digits_start] == '.')) {
      return std::nullopt;
    }
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
        while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) ++q;
        p = q;
      }
    }
    // from_chars rejects a leading '+'.
    std::size_t from = pos_;
    if (text_[from] == '+') ++from;
    double v = 0.0;
    auto [end, ec] = std::from_chars(text_.data() + from, text_.data() + p, v);
    if (ec != std::errc{} || end != text_.data() + p) return std::nullopt;
    pos_ = p;
    return v;
  }

  double expect_number() {
    auto v = number();
    if (!v) fail("number");
    return *v;
  }

  int expect_integer() {
    skip_space();
    const std::size_t start = pos_;
    const double v = expect_number();
    if (v != static_cast<double>(static_cast<int>(v)) ||
        text_.substr(start, pos_ - start).find_first_of(".eE") != std::string_view::npos) {
      pos_ = start;
      fail("integer");
    }
    return static_cast<int>(v);
  }

  SourceSpan span_at(std::size_t offset) const {
    SourceSpan s;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++s.line;
        s.column = 1;
      } else {
        ++s.column;
      }
    }
    return s;
  }

  SourceSpan span() {
    skip_space();
    return span_at(pos_);
  }

  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string& expected) {
    skip_space();
    const SourceSpan s = span_at(pos_);
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(s.line) + ", column " + std::to_string(s.column) +
                    ": expected " + expected + ", found " + found,
                s);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class SignalParser {
 public:
  explicit SignalParser(std::string_view text) : in_(text) {}

  Signal parse() {
    Signal s = signal();
    if (!in_.at_end()) in_.fail("'+' or end of input");
    return s;
  }

 private:
  struct Term {
    std::optional<Complex> coeff;
    Signal atom;
  };

  Signal signal() {
    const SourceSpan start = in_.span();
    std::vector<Term> terms;
    terms.push_back(term());
    while (in_.accept('+')) terms.push_back(term());

    return guarded(start, [&] {
      if (terms.size() == 1) {
        const Term& t = terms.front();
        if (!t.coeff) return t.atom;
        return lin_comb(*t.coeff, t.atom, 0.0, t.atom);
      }
      const Complex one{1.0, 0.0};
      Signal acc = lin_comb(terms[0].coeff.value_or(one), terms[0].atom,
                            terms[1].coeff.value_or(one), terms[1].atom);
      for (std::size_t i = 2; i < terms.size(); ++i) {
        acc = lin_comb(one, acc, terms[i].coeff.value_or(one), terms[i].atom);
      }
      return acc;
    });
  }

  Term term() {
    const std::size_t start = in_.pos();
    if (in_.peek() == '(') {
      // "(" starts either a complex coefficient or a parenthesized signal.
      if (auto c = complex_literal(); c && in_.accept('*')) return Term{c, atom()};
      in_.reset(start);
      return Term{std::nullopt, atom()};
    }
    if (auto v = in_.number()) {
      in_.expect('*');
      return Term{Complex{*v, 0.0}, atom()};
    }
    return Term{std::nullopt, atom()};
  }

  // "(" re ")" | "(" im "i)" | "(" re (+|-) im "i)"; nullopt if not one.
  std::optional<Complex> complex_literal() {
    if (!in_.accept('(')) return std::nullopt;
    auto first = in_.number();
    if (!first) return std::nullopt;
    if (in_.accept(')')) return Complex{*first, 0.0};
    if (in_.accept('i')) {
      if (!in_.accept(')')) return std::nullopt;
      return Complex{0.0, *first};
    }
    const char sign = in_.peek();
    if (sign != '+' && sign != '-') return std::nullopt;
    auto second = in_.number();
    if (!second || !in_.accept('i') || !in_.accept(')')) return std::nullopt;
    return Complex{*first, *second};
  }

  Signal atom() {
    const SourceSpan start = in_.span();
    if (in_.accept('(')) {
      Signal inner = signal();
      in_.expect(')');
      return inner;
    }
    const std::size_t name_pos = in_.pos();
    const std::string name = in_.identifier();
    if (name.empty()) in_.fail("signal name or '('");
    static const char* kNames =
        "rect, unilat_exp, bilateral_exp, sine_burst, damped_sine, gauss, shift, scale, "
        "reverse, modcos, modsin, cexp_shift, deriv";
    in_.expect('(');

    if (name == "rect" || name == "unilat_exp") {
      const double v = in_.expect_number();
      in_.expect(')');
      return guarded(start, [&] { return name == "rect" ? rect_pulse(v) : unilat_neg_exp(v); });
    }
    if (name == "bilateral_exp" || name == "gauss") {
      in_.expect(')');
      return name == "gauss" ? gaussian() : bilateral_exp();
    }
    if (name == "sine_burst" || name == "damped_sine") {
      const double x = in_.expect_number();
      in_.expect(',');
      const double w0 = in_.expect_number();
      in_.expect(')');
      return guarded(start, [&] {
        return name == "sine_burst" ? sine_tone_burst(x, w0) : damped_unilat_sine(x, w0);
      });
    }
    if (name == "reverse") {
      Signal s = signal();
      in_.expect(')');
      return time_reverse(s);
    }
    if (name == "shift" || name == "scale" || name == "modcos" || name == "modsin") {
      Signal s = signal();
      in_.expect(',');
      const double v = in_.expect_number();
      in_.expect(')');
      return guarded(start, [&] {
        if (name == "shift") return time_shift(s, v);
        if (name == "scale") return time_scale(s, v);
        if (name == "modcos") return mod_cos(s, v);
        return mod_sin(s, v);
      });
    }
    if (name == "cexp_shift") {
      Signal s = signal();
      in_.expect(',');
      const double w0 = in_.expect_number();
      in_.expect(',');
      ShiftSign sign = ShiftSign::Plus;
      if (in_.accept('-')) {
        sign = ShiftSign::Minus;
      } else if (!in_.accept('+')) {
        in_.fail("'+' or '-'");
      }
      in_.expect(')');
      return guarded(start, [&] { return freq_shift_exp(s, w0, sign); });
    }
    if (name == "deriv") {
      Signal s = signal();
      in_.expect(',');
      const int order = in_.expect_integer();
      in_.expect(')');
      return guarded(start, [&] { return derivative(s, order); });
    }
    in_.reset(name_pos);
    in_.fail(std::string("one of ") + kNames);
  }

  template <class Build>
  Signal guarded(SourceSpan span, Build build) {
    try {
      return build();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ConstraintViolation || e.span()) throw;
      throw Error(e.kind(),
                  "line " + std::to_string(span.line) + ", column " + std::to_string(span.column) +
                      ": " + e.what(),
                  span);
    }
  }

  Cursor in_;
};

std::string print_sum(const Signal& f);

// LinComb(a, f, 0, f) prints as the single term "a*f".
bool is_single_term(const LinComb& n) { return n.b == Complex{} && structurally_equal(n.f, n.g); }

bool prints_as_multi_term(const Signal& f) {
  const auto* n = std::get_if<LinComb>(&f.node());
  return n != nullptr && !is_single_term(*n);
}

std::string print_atom(const Signal& f) {
  const auto num = [](double v) { return format_number(v); };
  return std::visit(
      detail::Overloaded{
          [&](const Primitive& p) -> std::string {
            switch (p.kind) {
              case PrimitiveKind::RectPulse: return "rect(" + num(p.width) + ")";
              case PrimitiveKind::UnilatNegExp: return "unilat_exp(" + num(p.rate) + ")";
              case PrimitiveKind::BilateralExp: return "bilateral_exp()";
              case PrimitiveKind::SineToneBurst:
                return "sine_burst(" + num(p.width) + ", " + num(p.carrier) + ")";
              case PrimitiveKind::DampedUnilatSine:
                return "damped_sine(" + num(p.rate) + ", " + num(p.carrier) + ")";
              case PrimitiveKind::Gaussian: return "gauss()";
            }
            return "";
          },
          [&](const LinComb&) { return "(" + print_sum(f) + ")"; },
          [&](const TimeShift& n) { return "shift(" + print_sum(n.f) + ", " + num(n.t0) + ")"; },
          [&](const FreqShiftExp& n) {
            return "cexp_shift(" + print_sum(n.f) + ", " + num(n.omega0) + ", " +
                   (n.sign == ShiftSign::Plus ? "+" : "-") + ")";
          },
          [&](const ModCos& n) { return "modcos(" + print_sum(n.f) + ", " + num(n.omega0) + ")"; },
          [&](const ModSin& n) { return "modsin(" + print_sum(n.f) + ", " + num(n.omega0) + ")"; },
          [&](const TimeScale& n) { return "scale(" + print_sum(n.f) + ", " + num(n.a) + ")"; },
          [&](const TimeReverse& n) { return "reverse(" + print_sum(n.f) + ")"; },
          [&](const Derivative& n) {
            return "deriv(" + print_sum(n.f) + ", " + std::to_string(n.order) + ")";
          },
      },
      f.node().variant());
}

std::string print_term(Complex c, const Signal& f) {
  if (c == Complex{1.0, 0.0}) return print_atom(f);
  return format_complex(c) + "*" + print_atom(f);
}

std::string print_sum(const Signal& f) {
  const auto* n = std::get_if<LinComb>(&f.node());
  if (n == nullptr) return print_atom(f);
  if (is_single_term(*n)) return format_complex(n->a) + "*" + print_atom(n->f);
  // A leading sum with unit weight flattens: "x + y + z" nests to the left.
  const std::string left = n->a == Complex{1.0, 0.0} && prints_as_multi_term(n->f)
                               ? print_sum(n->f)
                               : print_term(n->a, n->f);
  return left + " + " + print_term(n->b, n->g);
}

}  // namespace

Signal parse_signal_dsl(std::string_view text) { return SignalParser(text).parse(); }

std::string print_signal(const Signal& f) { return print_sum(f); }

namespace {

std::vector<double> number_list(Cursor& in) {
  std::vector<double> out;
  in.expect('[');
  if (in.accept(']')) return out;
  do {
    out.push_back(in.expect_number());
  } while (in.accept(','));
  in.expect(']');
  return out;
}

}  // namespace

DiffEqSystem parse_system_spec(std::string_view text) {
  Cursor in(text);
  const std::size_t start = in.pos();
  const std::string head = in.identifier();
  if (head == "builtin") {
    in.expect(':');
    const std::string name = in.identifier();
    if (name.empty()) in.fail("builtin system name");
    std::map<std::string, double> params;
    in.expect('(');
    if (!in.accept(')')) {
      do {
        const std::string key = in.identifier();
        if (key.empty()) in.fail("parameter name");
        in.expect('=');
        params[key] = in.expect_number();
      } while (in.accept(','));
      in.expect(')');
    }
    if (!in.at_end()) in.fail("end of input");
    return builtin_system(name, params);
  }

  in.reset(start);
  std::optional<std::vector<double>> out_coeffs;
  std::optional<std::vector<double>> in_coeffs;
  for (int i = 0; i < 2; ++i) {
    const std::size_t key_pos = in.pos();
    const std::string key = in.identifier();
    if (key == "out" && !out_coeffs) {
      in.expect('=');
      out_coeffs = number_list(in);
    } else if (key == "in" && !in_coeffs) {
      in.expect('=');
      in_coeffs = number_list(in);
    } else {
      in.reset(key_pos);
      in.fail(i == 0 ? "'builtin:', 'out=' or 'in='" : (out_coeffs ? "'in='" : "'out='"));
    }
    if (i == 0) in.expect(';');
  }
  in.accept(';');
  if (!in.at_end()) in.fail("end of input");

  DiffEqSystem sys;
  sys.out_coeffs = *out_coeffs;
  sys.in_coeffs = *in_coeffs;
  sys.name = std::string(text);
  sys.validate();
  return sys;
}

}  // namespace fourierkit
