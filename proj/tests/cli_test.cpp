#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "idl/cli.hpp"
#include "idl/engine.hpp"
#include "idl/random.hpp"
#include "idl/structure_text.hpp"
#include "idl/text.hpp"
#include "json.hpp"

using namespace idl;

namespace {

struct Result {
  int exit;
  std::string out, err;
};

Result idl_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(IDL_CORPUS_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("idl-cli-test-" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, WfmPartial) {
  Result r = idl_run({"wfm", corpus("even-cycle.idl"), corpus("even-cycle.struct")});
  EXPECT_EQ(r.exit, kExitOk);
  EXPECT_EQ(r.out, "true: {even(d0)}\nfalse: {}\nunknown: {even(d1)}\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(idl_run({"check", corpus("family3.idl"), corpus("family.struct")}).exit, kExitOk);
  EXPECT_EQ(idl_run({"check", corpus("family-merged.idl"), corpus("family.struct")}).exit, kExitNegative);
  EXPECT_EQ(idl_run({"models", corpus("p_or_notp.idl"), corpus("empty.struct")}).exit, kExitNegative);
  EXPECT_EQ(idl_run({"equiv", "p | ~p", "true"}).exit, kExitNegative);
  EXPECT_EQ(idl_run({"equiv", "~~p", "p"}).exit, kExitOk);
}

TEST(Cli, ErrorsExitTwo) {
  Result missing = idl_run({"parse", "/nonexistent/theory.idl"});
  EXPECT_EQ(missing.exit, kExitError);
  EXPECT_NE(missing.err.find("cannot read"), std::string::npos);
  EXPECT_EQ(idl_run({}).exit, kExitError);
  EXPECT_EQ(idl_run({"frobnicate"}).exit, kExitError);
  std::string bad = temp_file("bad.idl", "vocab { pred p/0. }\ndefine p { p <- q. }\n");
  Result syntax = idl_run({"parse", bad});
  EXPECT_EQ(syntax.exit, kExitError);
  EXPECT_NE(syntax.err.find("2:"), std::string::npos) << syntax.err;
}

TEST(Cli, RuleCapIsAnError) {
  Result r = idl_run({"--max-rules", "1", "wfm", corpus("even-cycle.idl"), corpus("even-cycle.struct")});
  EXPECT_EQ(r.exit, kExitError);
}

TEST(Cli, JsonLines) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "wfm", corpus("even-cycle.idl"), corpus("even-cycle.struct")},
           {"--format", "json", "models", corpus("family-merged.idl"), corpus("family-open.struct")},
           {"--format", "json", "check", corpus("family3.idl"), corpus("family.struct")},
           {"--format", "json", "classify", corpus("family3.idl")},
           {"--format", "json", "equiv", "p", "~~p"}}) {
    Result r = idl_run(args);
    ASSERT_NE(r.exit, kExitError) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
      auto j = nlohmann::json::parse(line);
      EXPECT_TRUE(j.contains("command")) << line;
      ++count;
    }
    EXPECT_GT(count, 0);
  }
  auto j = nlohmann::json::parse(
      idl_run({"--format", "json", "wfm", corpus("even-cycle.idl"), corpus("even-cycle.struct")}).out);
  EXPECT_EQ(j["true"], nlohmann::json::array({"even(d0)"}));
  EXPECT_EQ(j["unknown"], nlohmann::json::array({"even(d1)"}));
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"--seed", "7", "selftest", "--count", "20"};
  Result a = idl_run(args), b = idl_run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.exit, b.exit);
}

TEST(Cli, SelftestPasses) {
  Result r = idl_run({"selftest", "--count", "40"});
  EXPECT_EQ(r.exit, kExitOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

// `wfm` prints the justified extension of random definitions.
TEST(Cli, WfmMatchesLibrary) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 30; ++i) {
    RandomInstance inst = random_definition(rng);
    std::string th = temp_file("w.idl", render_theory(inst.theory));
    std::string st = temp_file("w.struct", render_structure(inst.structure));
    Result r = idl_run({"--format", "json", "wfm", th, st});
    ASSERT_EQ(r.exit, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    Structure wfm = justified_extension(inst.theory.definitions[0], inst.structure);
    std::size_t t = 0, f = 0, u = 0;
    for (const auto& p : inst.theory.definitions[0].defined) {
      for (auto v : wfm.predicate(p).values) {
        t += v == TruthValue::True;
        f += v == TruthValue::False;
        u += v == TruthValue::Unknown;
      }
    }
    EXPECT_EQ(j["true"].size(), t);
    EXPECT_EQ(j["false"].size(), f);
    EXPECT_EQ(j["unknown"].size(), u);
  }
}

TEST(Cli, SitcalcSuitcase) {
  Result r = idl_run({"sitcalc", corpus("sitcalc-suitcase.sc"), "--depth", "2"});
  EXPECT_EQ(r.exit, kExitOk) << r.err;
  EXPECT_NE(r.out.find("suitcase_open(s0_open1_open2)"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("(z)"), std::string::npos);
  EXPECT_EQ(r.out.find("unknown:"), std::string::npos);
}

TEST(Cli, DeductiveDbEvaluate) {
  Result r = idl_run({"import", "ddb", corpus("ddb-network.ddb"), "--evaluate"});
  EXPECT_EQ(r.exit, kExitOk) << r.err;
  EXPECT_NE(r.out.find("connected(a, a)"), std::string::npos);
  EXPECT_NE(r.out.find("connected(d, e)"), std::string::npos);
  EXPECT_EQ(r.out.find("connected(e, d)"), std::string::npos);
}

}  // namespace
