#include <adelic_cli/cli.hpp>

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

using adelic::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "adelic");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ADELIC_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, SplitExamples) {
  auto a = run({"split", data("sqrt2.field"), "--prime", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("(1,1)(1,1) via Kummer"), std::string::npos) << a.out;
  auto b = run({"split", "poly:x^2 - 2", "--prime", "2"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("(2,1) via NewtonPolygon"), std::string::npos) << b.out;
  auto c = run({"split", "poly:x", "--prime", "5"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("(1,1)"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"split", data("malformed.field"), "--prime", "3"}).code, 2);
  EXPECT_EQ(run({"split", data("sqrt2.field")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"split", data("missing.field"), "--prime", "3"}).code, 5);
  EXPECT_EQ(run({"split", "poly:x^2 - 2", "--prime", "9"}).code, 4);
  // (x+1)^2 + 4 at 2: the residual polynomial is inseparable and 2 divides the index
  EXPECT_EQ(run({"split", "poly:x^2 + 2*x + 5", "--prime", "2"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerdictsAreDataNotErrors) {
  auto ne = run({"--format", "json", "equiv", data("sqrt2.field"), data("sqrt3.field"), "--bound", "100"});
  EXPECT_EQ(ne.code, 0);
  const auto j = nlohmann::json::parse(ne.out);
  EXPECT_EQ(j["kind"], "NotEquivalent");
  EXPECT_EQ(j["witness"], 7);
  auto eq = run({"--format", "json", "equiv", data("sqrt2.field"), data("sqrt2.field")});
  EXPECT_EQ(eq.code, 0);
  EXPECT_EQ(nlohmann::json::parse(eq.out)["kind"], "EquivalentUpToBound");
  auto iso = run({"--format", "json", "adele-iso", "poly:x^2 - 2", "poly:x^2 - 3", "--bound", "100"});
  EXPECT_EQ(iso.code, 0);
  const auto ij = nlohmann::json::parse(iso.out);
  EXPECT_EQ(ij["kind"], "NotIsomorphic");
  for (const char* key : {"kind", "witness", "matching", "excluded_primes", "bound"})
    EXPECT_TRUE(ij.contains(key)) << key;
}

TEST(Cli, FvEval) {
  auto t = run({"fv-eval", "--family", data("z235.json"), "--psi", "v0 = 1", "--theta", "w0 = w0",
                "--arg", "1,1,1"});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("true"), std::string::npos);
  auto f = run({"--format", "json", "fv-eval", "--family", data("z235.json"), "--psi", "v0 = 1",
                "--theta", "w0 + w0 = 0", "--arg", "1,1,1"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(nlohmann::json::parse(f.out)["value"], false);
  EXPECT_EQ(run({"fv-eval", "--family", data("z235.json"), "--psi", "v0 = v1", "--theta", "w0 = 0",
                 "--arg", "0,0,0"}).code, 4);
  EXPECT_EQ(run({"fv-eval", "--family", data("z235.json"), "--psi", "v0 = ", "--theta", "w0 = 0"}).code, 2);
}

TEST(Cli, JsonOutputsParse) {
  for (std::vector<std::string> args : {
           std::vector<std::string>{"--format", "json", "split", "poly:x^3 - 2", "--prime", "3"},
           {"--format", "json", "spectrum", "poly:x^2 + 1", "--bound", "50"},
           {"--format", "json", "invariants", "poly:x^3 - x - 1"},
           {"--format", "json", "adele-iso", "poly:x^3 - 2", "poly:x^3 - 2", "--bound", "50"}}) {
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << r.out;
  }
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args{"spectrum", "poly:x^4 - x - 1", "--bound", "400"};
  EXPECT_EQ(run(args).out, run(args).out);
  const auto a = run({"--corpus"});
  const auto b = run({"--corpus"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
