#include <gtest/gtest.h>

#include <fstream>
#include <string>

#include "fourierkit/dsl.hpp"
#include "fourierkit/error.hpp"
#include "support/generators.hpp"

using namespace fourierkit;

namespace {

Error error_of(const std::string& text) {
  try {
    parse_signal_dsl(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return Error(ErrorKind::Usage, "");
}

std::vector<std::string> corpus() {
  std::ifstream in(std::string(FOURIERKIT_TEST_DATA) + "/dsl_corpus.txt");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST(ParseSignalDsl, Primitive) {
  EXPECT_TRUE(structurally_equal(parse_signal_dsl("rect(1)"), rect_pulse(1.0)));
  EXPECT_TRUE(structurally_equal(parse_signal_dsl("  gauss( ) "), gaussian()));
}

TEST(ParseSignalDsl, ModulatedRect) {
  EXPECT_TRUE(structurally_equal(parse_signal_dsl("modsin(rect(2), 5)"), mod_sin(rect_pulse(2.0), 5.0)));
}

TEST(ParseSignalDsl, SumOfTerms) {
  const auto f = parse_signal_dsl("2*rect(1) + shift(gauss(), 1)");
  EXPECT_TRUE(structurally_equal(f, lin_comb(2.0, rect_pulse(1.0), 1.0, time_shift(gaussian(), 1.0))));
}

TEST(ParseSignalDsl, ComplexCoefficient) {
  const auto f = parse_signal_dsl("(1+2i)*bilateral_exp()");
  EXPECT_EQ(f.eval(0.0), Complex(1.0, 2.0));
  const auto g = parse_signal_dsl("(-0.5i)*gauss()");
  EXPECT_EQ(g.eval(0.0), Complex(0.0, -0.5));
}

TEST(ParseSignalDsl, SyntaxErrorsCarryPosition) {
  const Error missing = error_of("rect(");
  EXPECT_EQ(missing.kind(), ErrorKind::SyntaxError);
  ASSERT_TRUE(missing.span().has_value());
  EXPECT_EQ(missing.span()->line, 1);
  EXPECT_EQ(missing.span()->column, 6);
  EXPECT_NE(std::string(missing.what()).find("expected"), std::string::npos);

  const Error unknown = error_of("gauss() +\n  triangle(1)");
  EXPECT_EQ(unknown.kind(), ErrorKind::SyntaxError);
  ASSERT_TRUE(unknown.span().has_value());
  EXPECT_EQ(unknown.span()->line, 2);
  EXPECT_EQ(unknown.span()->column, 3);

  EXPECT_EQ(error_of("rect(1) rect(2)").kind(), ErrorKind::SyntaxError);
  EXPECT_EQ(error_of("cexp_shift(gauss(), 1, *)").kind(), ErrorKind::SyntaxError);
  EXPECT_EQ(error_of("deriv(gauss(), 1.5)").kind(), ErrorKind::SyntaxError);
  EXPECT_EQ(error_of("").kind(), ErrorKind::SyntaxError);
}

TEST(ParseSignalDsl, ConstraintErrorsCarrySpan) {
  const Error bad_width = error_of("gauss() + rect(-1)");
  EXPECT_EQ(bad_width.kind(), ErrorKind::ConstraintViolation);
  ASSERT_TRUE(bad_width.span().has_value());
  EXPECT_EQ(bad_width.span()->column, 11);

  const Error rough = error_of("deriv(rect(1), 1)");
  EXPECT_EQ(rough.kind(), ErrorKind::ConstraintViolation);
  ASSERT_TRUE(rough.span().has_value());
  EXPECT_EQ(rough.span()->column, 1);

  EXPECT_EQ(error_of("scale(gauss(), 0)").kind(), ErrorKind::ConstraintViolation);
}

TEST(ParseSystemSpec, BuiltinAndExplicit) {
  const auto bp = parse_system_spec("builtin:bandpass(wc=2)");
  EXPECT_EQ(bp.out_coeffs, (std::vector<double>{4.0, 4.0, 1.0}));
  EXPECT_EQ(bp.in_coeffs, (std::vector<double>{0.0, 2.0}));
  const auto lag = parse_system_spec("out=[1,1]; in=[1]");
  EXPECT_EQ(lag.out_coeffs, (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(lag.in_coeffs, (std::vector<double>{1.0}));
  const auto swapped = parse_system_spec(" in = [ 2 ] ; out = [ 3 , 1 ] ");
  EXPECT_EQ(swapped.out_coeffs, (std::vector<double>{3.0, 1.0}));
  const auto mems = parse_system_spec("builtin:mems(K=1, D=1, M=1)");
  EXPECT_EQ(mems.out_coeffs.size(), 3u);
}

TEST(ParseSystemSpec, Rejections) {
  auto kind = [](const std::string& text) {
    try {
      parse_system_spec(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Usage;
  };
  EXPECT_EQ(kind("out=[1]; in=[1,1]"), ErrorKind::InvalidSystem);
  EXPECT_EQ(kind("out=[1,1]"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("builtin:bandpass(wc=)"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("builtin:bandpass(wc=-1)"), ErrorKind::ConstraintViolation);
}

TEST(PrintSignal, CorpusRoundTrip) {
  const auto lines = corpus();
  ASSERT_EQ(lines.size(), 50u);
  for (const auto& line : lines) {
    const Signal f = parse_signal_dsl(line);
    const std::string printed = print_signal(f);
    EXPECT_TRUE(structurally_equal(parse_signal_dsl(printed), f)) << line << " -> " << printed;
    EXPECT_EQ(print_signal(parse_signal_dsl(printed)), printed);
  }
}

TEST(PrintSignal, RandomTreesRoundTrip) {
  gen::Gen gen(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const Signal f = gen.signal(gen.integer(0, 4));
    const std::string printed = print_signal(f);
    EXPECT_TRUE(structurally_equal(parse_signal_dsl(printed), f)) << printed;
  }
}
