#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "springer/json_io.hpp"
#include "springer/verify.hpp"

using namespace springer;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SPRINGER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("springer_test_" + name);
  std::ofstream(path) << content;
  return path;
}

SuiteConfig config(std::vector<std::string> suites, std::vector<std::uint32_t> primes = {2, 3, 5, 7}) {
  SuiteConfig cfg;
  cfg.suites = std::move(suites);
  cfg.primes = std::move(primes);
  return cfg;
}

}  // namespace

TEST(MatrixJson, CanonicalLayout) {
  Field f3(3);
  EXPECT_EQ(matrix_to_json(FpMatrix::from_ints(f3, {{0, 1}, {0, 0}})).dump(),
            R"({"p":3,"e":1,"n":2,"entries":[[0,1],[0,0]]})");
  Field f4(2, 2);
  FpMatrix m(f4, 1);
  m.set_raw(0, 0, {1, 1});
  EXPECT_EQ(matrix_to_json(m).dump(), R"({"p":2,"e":2,"n":1,"entries":[[[1,1]]]})");
  EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
}

TEST(MatrixJson, ErrorsNameTheLocation) {
  auto message = [](const std::string& text) {
    try {
      matrix_from_string(text, "x.json");
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message(R"({"p":3,"e":1,"n":2,"entries":[[0,1],[3,0]]})"),
            "x.json: entries[1][0]: 3 is not a reduced residue mod 3");
  EXPECT_EQ(message(R"({"e":1,"n":1,"entries":[[0]]})"), "x.json: missing field \"p\"");
  EXPECT_EQ(message(R"({"p":4,"e":1,"n":1,"entries":[[0]]})"), "x.json: field \"p\": 4 is not a supported prime");
  EXPECT_EQ(message(R"({"p":3,"e":1,"n":2,"entries":[[0,1]]})"), "x.json: entries: expected 2 rows, got 1");
  EXPECT_EQ(message(R"({"p":2,"e":2,"n":1,"entries":[[1]]})"), "x.json: entries[0][0]: expected a pair [c0, c1]");
  EXPECT_EQ(message("{\"p\":3,"), "x.json: invalid JSON at byte 8");
}

TEST(EntryLists, Parsing) {
  Field f3(3), f9(3, 2);
  EXPECT_EQ(WittVector(f3, parse_entry_list("1,0,5", f3)), WittVector::from_ints(f3, {1, 0, 2}));
  EXPECT_EQ(parse_entry_list("1:2", f9).front().coords(), (Coords{1, 2}));
  EXPECT_THROW(parse_entry_list("1,x", f3), FormatError);
  EXPECT_THROW(parse_entry_list("1:1", f3), FormatError);
  EXPECT_EQ(parse_size_list("2,1,3"), (std::vector<std::size_t>{2, 1, 3}));
  EXPECT_THROW(parse_size_list("2,,1"), FormatError);
  EXPECT_THROW(parse_size_list("-1"), FormatError);
}

TEST(RunSuite, ValidationErrors) {
  EXPECT_THROW(run_suite(config({})), UsageError);
  EXPECT_THROW(run_suite(config({"no-such-suite"})), UsageError);
  EXPECT_THROW(run_suite(config({"all"}, {4})), UsageError);
  auto cfg = config({"restricts"}, {2, 3});
  cfg.kinds = {GroupKind::Sp};
  cfg.kinds_explicit = true;
  EXPECT_THROW(run_suite(cfg), UsageError);
  cfg = config({"restricts"});
  cfg.trials = 0;
  EXPECT_THROW(run_suite(cfg), UsageError);
  cfg.trials.reset();
  cfg.max_dim = 1;
  EXPECT_THROW(run_suite(cfg), UsageError);
}

TEST(RunSuite, ReportInvariantsAndDeterminism) {
  auto cfg = config({"ah-integrality", "witt-group", "commutativity"});
  cfg.seed = 7;
  Report a = run_suite(cfg), b = run_suite(cfg);
  ASSERT_EQ(a.suites.size(), 3u);
  EXPECT_TRUE(a.all_passed());
  for (const auto& s : a.suites) {
    EXPECT_EQ(s.passed + s.failed, s.cases);
    EXPECT_GT(s.cases, 0u);
  }
  EXPECT_EQ(a.suites[2].cases, 81u + 4096u + 10000u);
  a.timestamp = "t1";
  b.timestamp = "t2";
  EXPECT_EQ(a.to_json(false), b.to_json(false));
  EXPECT_NE(a.to_json(true), b.to_json(true));
  EXPECT_EQ(a.to_json()["version"], 1);
}

TEST(RunSuite, RegistryNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& d : suite_registry()) EXPECT_TRUE(names.insert(d.name).second) << d.name;
  EXPECT_EQ(names.size(), 20u);
}

TEST(Recorder, FailuresKeepWitnessesAndErrors) {
  SuiteConfig cfg;
  SuiteRecord r{"demo", "", 0, 0, 0, {}};
  Recorder rec(cfg, r);
  rec.check([] { return true; }, [] { return Json{}; });
  rec.check([] { return false; }, [] { return Json{{"case", 1}}; });
  rec.check([]() -> bool { throw std::domain_error("boom"); }, [] { return Json{{"case", 2}}; });
  for (int i = 0; i < 40; ++i) rec.check([] { return false; }, [] { return Json{}; });
  EXPECT_EQ(r.cases, 43u);
  EXPECT_EQ(r.passed, 1u);
  EXPECT_EQ(r.failed, 42u);
  EXPECT_EQ(r.witnesses.size(), Recorder::kMaxWitnesses);
  EXPECT_EQ(r.witnesses[1]["error"], "boom");
}

TEST(Cli, ArtinHasseCoefficients) {
  EXPECT_EQ(run_cli("ah-coeffs --p 3 --n 3").out, "1 1 2 2\n");
  EXPECT_EQ(run_cli("ah-coeffs --p 2 --n 5 --rational").out, "1 1 1 2/3 2/3 7/15\n");
  EXPECT_EQ(run_cli("ah-coeffs --p 3 --n 2 --rational --json").out, "[\"1\",\"1\",\"1/2\"]\n");
  EXPECT_EQ(run_cli("ah-coeffs --p 4 --n 2").code, 2);
}

TEST(Cli, WittCommands) {
  EXPECT_EQ(run_cli("witt add --p 2 --lhs 1,0 --rhs 1,0").out, "0,1\n");
  EXPECT_EQ(run_cli("witt from-int --p 2 --m 2 --n 3").out, "1,1\n");
  EXPECT_EQ(run_cli("witt order --p 2 --vector 1,0").out, "4\n");
  EXPECT_EQ(run_cli("witt neg --p 3 --vector 1,0").out, "2,0\n");
  EXPECT_EQ(run_cli("witt pow-p --p 3 --e 2 --vector 0:1,1").out, "0:0,0:2\n");
  EXPECT_EQ(run_cli("witt add --p 2 --lhs 1 --rhs 1,0").code, 2);
  EXPECT_EQ(run_cli("witt from-int --p 2 --m 4 --n 3").code, 2);
}

TEST(Cli, MatrixCommands) {
  auto j3 = temp_file("j3.json", R"({"p":2,"e":1,"n":3,"entries":[[0,1,0],[0,0,1],[0,0,0]]})");
  EXPECT_EQ(run_cli("exp --matrix " + j3.string()).out, R"({"p":2,"e":1,"n":3,"entries":[[1,1,1],[0,1,1],[0,0,1]]})"
                                                       "\n");
  auto u = temp_file("u.json", R"({"p":2,"e":1,"n":3,"entries":[[1,1,1],[0,1,1],[0,0,1]]})");
  EXPECT_EQ(run_cli("log --matrix " + u.string()).out, R"({"p":2,"e":1,"n":3,"entries":[[0,1,0],[0,0,1],[0,0,0]]})"
                                                      "\n");
  EXPECT_EQ(run_cli("embed --matrix " + j3.string() + " --vector 0,1").out,
            R"({"p":2,"e":1,"n":3,"entries":[[1,0,1],[0,1,0],[0,0,1]]})"
            "\n");
  EXPECT_EQ(run_cli("embed --matrix " + j3.string() + " --vector 1").code, 1);
  auto id = temp_file("id.json", R"({"p":3,"e":1,"n":1,"entries":[[1]]})");
  EXPECT_EQ(run_cli("exp --matrix " + id.string()).code, 1);
  auto bad = temp_file("bad.json", R"({"p":3,"e":1,"n":1,"entries":[[7]]})");
  EXPECT_EQ(run_cli("exp --matrix " + bad.string()).code, 2);
  EXPECT_EQ(run_cli("exp --matrix /nonexistent.json").code, 2);
}

TEST(Cli, ParabolicCommands) {
  EXPECT_EQ(run_cli("parabolic class --comp 1,1,1 --p 3").out, "2\nrestricted\n");
  EXPECT_EQ(run_cli("parabolic class --comp 1,1,1,1 --p 3").out, "3\nnot restricted\n");
  auto x = temp_file("x.json", R"({"p":3,"e":1,"n":3,"entries":[[0,1,0],[0,0,1],[0,0,0]]})");
  EXPECT_EQ(run_cli("parabolic eps --comp 1,1,1 --matrix " + x.string()).out,
            R"({"p":3,"e":1,"n":3,"entries":[[1,1,2],[0,1,1],[0,0,1]]})"
            "\n");
  EXPECT_EQ(run_cli("parabolic eps --comp 2,1 --matrix " + x.string()).code, 1);
  EXPECT_EQ(run_cli("parabolic eps --comp 2,2 --matrix " + x.string()).code, 2);
}

TEST(Cli, VerifyExitCodesAndReport) {
  auto report = std::filesystem::temp_directory_path() / "springer_test_report.json";
  auto ok = run_cli("verify --suite ah-integrality,ghost-identity --seed 3 --report " + report.string());
  EXPECT_EQ(ok.code, 0);
  auto j = Json::parse(std::ifstream(report));
  EXPECT_EQ(j["version"], 1);
  EXPECT_TRUE(j.contains("timestamp"));
  EXPECT_EQ(j["suites"].size(), 2u);
  EXPECT_EQ(j["config"]["seed"], 3);
  EXPECT_EQ(run_cli("verify --suite ''").code, 2);
  EXPECT_EQ(run_cli("verify --suite nope").code, 2);
  EXPECT_EQ(run_cli("verify --suite restricts --p 2 --kinds Sp").code, 2);
  EXPECT_EQ(run_cli("verify --suite restricts --kinds XY").code, 2);
  EXPECT_EQ(run_cli("verify --suite all --p 6").code, 2);
  EXPECT_EQ(run_cli("--bogus").code, 2);
  EXPECT_NE(run_cli("verify --list").out.find("witt-hom"), std::string::npos);
}
