#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "render.hpp"

using namespace trilocal::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TRILOCAL_TEST_DATA) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, NormalizePrintsNormalFormAndOracle) {
  const auto r = run_cli({"normalize", "--family", R"({"kind":"scaled","k":2})", "--expr", "x[3]*x[5]"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_TRUE(contains(r.out, "normal_form: x[15]*x[1]\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "oracle: 15/4\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "seed: 20240611\n"));

  const auto d = run_cli({"normalize", "--family", R"({"kind":"double"})", "--expr", "x[(2,3)]*x[(0,1)]"});
  EXPECT_TRUE(contains(d.out, "oracle: 2x+3x^2\n")) << d.out;
}

TEST(Cli, GeneratorOfPNormalizesToOne) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {R"({"kind":"regular"})", "1"},
      {R"({"kind":"scaled","k":2})", "2"},
      {R"({"kind":"double"})", "(1,0)"},
      {R"({"kind":"tensor-free","A_gens":["s"],"B_gens":["u"]})", "t(1,1)"},
      {R"({"kind":"hnn-free","A_gens":["s"]})", "h(1)"},
  };
  for (const auto& [family, p] : cases) {
    const auto r = run_cli({"normalize", "--family", family, "--expr", "x[" + p + "]"});
    EXPECT_EQ(r.code, kPass);
    EXPECT_TRUE(contains(r.out, "normal_form: 1\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "oracle: 1\n")) << r.out;
  }
}

TEST(Cli, ExitCodes) {
  const auto parse = run_cli({"normalize", "--family", R"({"kind":"scaled","k":2})", "--expr", "x[3"});
  EXPECT_EQ(parse.code, kInputError);
  EXPECT_TRUE(contains(parse.err, "offset 3")) << parse.err;

  EXPECT_EQ(run_cli({"normalize", "--family", R"({"kind":"nope"})", "--expr", "1"}).code, kInputError);
  EXPECT_EQ(run_cli({"normalize", "--expr", "1"}).code, kInputError);
  EXPECT_EQ(run_cli({}).code, kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kInputError);
  EXPECT_EQ(run_cli({"localize-module", "--spec", data("bad_schema.json")}).code, kInputError);
  EXPECT_EQ(run_cli({"localize-module", "--spec", data("missing.json")}).code, kInputError);
  EXPECT_EQ(run_cli({"localize-module", "--spec", data("unsupported.json")}).code, kInputError);

  const auto budget = run_cli({"normalize", "--family", R"({"kind":"hnn-free","A_gens":["s"]})", "--expr",
                               "(x[h(s,s)]+x[h(1,s)])^12", "--budget", "100"});
  EXPECT_EQ(budget.code, kBudgetExhausted);

  EXPECT_EQ(run_cli({"verify", "--suite", "paper", "--samples", "20", "--inject-fault"}).code, kVerifyFailed);
  EXPECT_EQ(run_cli({"--help"}).code, kPass);
}

TEST(Cli, FixtureSuitePasses) {
  const auto r = run_cli({"verify", "--suite", "paper", "--samples", "50"});
  EXPECT_EQ(r.code, kPass) << r.out;
  EXPECT_TRUE(contains(r.out, "failed_reports: 0\n"));
}

TEST(Cli, RandomSuiteIsDeterministic) {
  const std::vector<std::string> args = {"verify", "--suite", "random", "--seed", "42", "--samples", "30"};
  const auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, kPass) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto other = run_cli({"verify", "--suite", "random", "--seed", "43", "--samples", "30"});
  EXPECT_NE(a.out, other.out);
}

TEST(Cli, JsonMirrorsText) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"normalize", "--family", R"({"kind":"double"})", "--expr", "x[(2,3)]*x[(0,1)] + 1"},
           {"localize-module", "--spec", data("d2.json")},
           {"verify", "--suite", "random", "--family", R"({"kind":"regular"})", "--samples", "10"}}) {
    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto text = run_cli(args);
    const auto json = run_cli(json_args);
    EXPECT_EQ(text.code, json.code);
    EXPECT_EQ(render_text(Json::parse(json.out)), text.out);
  }
}

TEST(Cli, LocalizeModule) {
  const auto d2 = run_cli({"localize-module", "--spec", data("d2.json")});
  EXPECT_EQ(d2.code, kPass);
  EXPECT_TRUE(contains(d2.out, "free_rank: 1\n")) << d2.out;
  const auto z3 = run_cli({"localize-module", "--spec", data("torsion_z3.json")});
  EXPECT_TRUE(contains(z3.out, "invariant_factors: [3]\n")) << z3.out;
}

TEST(Cli, FamilyFromFile) {
  const auto r = run_cli({"normalize", "--family", "@" + data("scaled2_family.json"), "--expr", "x[3]"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_TRUE(contains(r.out, "oracle: 3/2\n"));
}

TEST(Cli, RhoFractionFactor) {
  const auto rho = run_cli({"rho", "--family", R"({"kind":"scaled","k":2})", "--component", "A", "--expr", "3"});
  EXPECT_TRUE(contains(rho.out, "oracle: 3\n")) << rho.out;
  const auto frac = run_cli({"fraction", "--family", R"({"kind":"regular"})", "--a0", "2", "--expr", "x[5]*x[1]^2"});
  EXPECT_EQ(frac.code, kPass);
  EXPECT_TRUE(contains(frac.out, "numerator: 5\n")) << frac.out;
  EXPECT_TRUE(contains(frac.out, "exponent: 3\n"));
  const auto fac = run_cli({"factor", "--family", R"({"kind":"regular"})", "--a0", "2", "--expr", "x[3]*x[5]"});
  EXPECT_EQ(fac.code, kPass);
  EXPECT_TRUE(contains(fac.out, "value: 15/4\n")) << fac.out;
  EXPECT_EQ(run_cli({"fraction", "--family", R"({"kind":"regular"})", "--a0", "2", "--expr", "x[(1,2)]"}).code,
            kInputError);
}

TEST(Cli, LocalizeRing) {
  const auto r = run_cli({"localize-ring", "--family", R"({"kind":"scaled","k":2})", "--samples", "30"});
  EXPECT_EQ(r.code, kPass) << r.out;
  EXPECT_TRUE(contains(r.out, "localization: M2(T)\n"));
}
