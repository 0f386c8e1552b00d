#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fourierkit/cli.hpp"
#include "fourierkit/error.hpp"

using namespace fourierkit;
using nlohmann::json;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST(RunCommand, FtOfRectNearPi) {
  const Invocation r = run({"ft", "--signal", "rect(1)", "--omega", "3.14159"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["command"], "ft");
  ASSERT_EQ(doc["results"].size(), 1u);
  const auto& row = doc["results"][0];
  const double sym = row["symbolic"]["re"];
  const double num = row["numeric"]["re"];
  EXPECT_NEAR(sym, 2.0 * std::sin(3.14159) / 3.14159, 1e-15);
  EXPECT_NEAR(sym, 0.0, 1e-5);
  EXPECT_NEAR(num, sym, 1e-9);
  EXPECT_TRUE(row["agree"].get<bool>());
  EXPECT_TRUE(doc["errors"].empty());
}

TEST(RunCommand, FreqrespMemsCsv) {
  const Invocation r = run({"freqresp", "--system", "builtin:mems(K=1,D=1,M=1)", "--omega", "0:0.1:10", "--out", "csv"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines[0], "# stable=true");
  std::size_t header = 0;
  while (header < lines.size() && lines[header].rfind("#", 0) == 0) ++header;
  ASSERT_LT(header, lines.size());
  EXPECT_EQ(lines[header], "omega,re,im,magnitude,phase");
  EXPECT_EQ(lines.size() - header - 1, 101u);
  EXPECT_EQ(lines[header + 1], "0,1,0,1,0");
  EXPECT_EQ(lines[header + 4].substr(0, 4), "0.3,");
  EXPECT_EQ(lines.back().substr(0, 3), "10,");
}

TEST(RunCommand, VerifyPropertySuitePasses) {
  const Invocation r = run({"verify", "--suite", "table2"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_GE(doc["results"].size(), 20u);
  for (const auto& report : doc["results"]) {
    EXPECT_TRUE(report["passed"].get<bool>()) << report["property"];
    EXPECT_FALSE(report["theorem"].get<std::string>().empty());
  }
}

TEST(RunCommand, FailedCheckExitsOne) {
  const Invocation r = run({"verify", "--suite", "relations", "--tol", "1e-30"});
  EXPECT_EQ(r.code, kExitCheckFailed);
}

TEST(RunCommand, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"transform"}).code, kExitUsage);
  EXPECT_EQ(run({"ft", "--signal", "rect(1)"}).code, kExitUsage);
  EXPECT_EQ(run({"ft", "--signal", "rect(1)", "--omega", "1", "--out", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"freqresp", "--system", "out=[1]; in=[1,1]", "--omega", "1"}).code, kExitUsage);

  const Invocation syntax = run({"ft", "--signal", "rect(", "--omega", "1"});
  EXPECT_EQ(syntax.code, kExitUsage);
  const json doc = json::parse(syntax.out);
  EXPECT_EQ(doc["errors"][0]["kind"], "SyntaxError");
  EXPECT_EQ(doc["errors"][0]["line"], 1);
  EXPECT_EQ(doc["errors"][0]["column"], 6);
  EXPECT_FALSE(syntax.err.empty());
}

TEST(RunCommand, NumericalFailureExitsThree) {
  const Invocation r = run({"ft", "--signal", "unilat_exp(1e-9)", "--omega", "1"});
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_EQ(json::parse(r.out)["errors"][0]["kind"], "NoConvergence");
  EXPECT_EQ(run({"ft", "--signal", "unilat_exp(1e-9)", "--omega", "1", "--symbolic-only"}).code, kExitPass);
}

TEST(RunCommand, UnstableSystemStillReportsResponse) {
  const Invocation r = run({"freqresp", "--system", "out=[-1,0,1]; in=[1]", "--omega", "1"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_FALSE(json::parse(r.out)["analysis"]["stable"].get<bool>());
}

TEST(RunCommand, DeterministicOutput) {
  const std::vector<std::string> args = {"ft", "--signal", "2*rect(1) + shift(gauss(), 1)", "--omega",
                                         "-2:0.5:2"};
  const Invocation a = run(args);
  const Invocation b = run(args);
  ASSERT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
}

TEST(RunCommand, CatalogListsPrimitives) {
  const Invocation r = run({"catalog"});
  ASSERT_EQ(r.code, kExitPass);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["results"].size(), 6u);
  for (const auto& entry : doc["results"]) {
    EXPECT_FALSE(entry["theorem"].get<std::string>().empty());
  }
}

TEST(ParseOmegaSpec, ListsAndRanges) {
  EXPECT_EQ(parse_omega_spec("0.5"), (std::vector<double>{0.5}));
  EXPECT_EQ(parse_omega_spec("1,-2,3"), (std::vector<double>{1.0, -2.0, 3.0}));
  EXPECT_EQ(parse_omega_spec("0:0.25:1"), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(parse_omega_spec("1:-0.5:0"), (std::vector<double>{1.0, 0.5, 0.0}));
  const auto tenths = parse_omega_spec("0:0.1:1");
  ASSERT_EQ(tenths.size(), 11u);
  EXPECT_EQ(tenths[3], 0.3);
  EXPECT_EQ(parse_omega_spec("0:0.3:1.0000001").size(), 4u);
  for (const std::string bad : {"", "a", "1,,2", "0:0:1", "1:1:0", "0:1"}) {
    EXPECT_THROW(parse_omega_spec(bad), Error) << bad;
  }
}
