#include <gtest/gtest.h>

#include <clocale>
#include <locale>
#include <sstream>

#include <nlohmann/json.hpp>

#include "crjet_cli.hpp"
#include "test_support.hpp"

namespace crjet {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const char* name) { return (test::fixture_dir() / name).string(); }

TEST(Cli, DimsTable) {
  const auto r = run_cli({"dims", "--m", "1", "--d", "1", "--mprime", "1", "--nu", "2", "--k", "10"});
  EXPECT_EQ(r.status, 0);
  for (const char* value : {"282", "256", "10", "266"}) {
    EXPECT_NE(r.out.find(value), std::string::npos) << value;
  }
}

TEST(Cli, DimsJson) {
  const auto r = run_cli({"dims", "--m", "1", "--d", "1", "--mprime", "1", "--nu", "2", "--k", "10", "--json"});
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim_target"], 282);
  EXPECT_EQ(j["dim_source_maps"], 256);
  EXPECT_EQ(j["dim_source_models"], 10);
}

TEST(Cli, Crossover) {
  const auto r = run_cli({"crossover", "--m", "1", "--d", "1", "--mprime", "1", "--nu", "2", "--kmax", "30", "--json"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["k_star"], 10);
}

TEST(Cli, PullbackHeisenberg) {
  const auto out_path = std::filesystem::temp_directory_path() / "crjet_cli_germ.json";
  const auto r = run_cli({"pullback", "--in", fixture("expressions/heisenberg.json"), "--out", out_path.string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "x1^2 + y1^2\n");
  EXPECT_EQ(test::read_text(out_path), test::read_text(fixture("heisenberg.json")));
  std::filesystem::remove(out_path);
}

TEST(Cli, CheckDistinguishesTamperedGerms) {
  EXPECT_EQ(run_cli({"check", "--in", fixture("heisenberg.json")}).status, 0);
  EXPECT_EQ(run_cli({"check", "--in", fixture("codim2.json")}).status, 0);
  const auto tampered = run_cli({"check", "--in", fixture("heisenberg_tampered.json")});
  EXPECT_EQ(tampered.status, 1);
  EXPECT_EQ(tampered.out, "mismatch\n");
}

TEST(Cli, Norm) {
  const auto r = run_cli({"norm", "--in", fixture("heisenberg.json"), "--t", "1/2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1/2\n");
}

TEST(Cli, ExitCodesByErrorCategory) {
  const auto missing = run_cli({"check", "--in", "/nonexistent.json"});
  EXPECT_EQ(missing.status, 4);
  EXPECT_EQ(nlohmann::json::parse(missing.err)["error"]["category"], "io");

  const auto invalid = run_cli({"dims", "--m", "2", "--d", "1", "--mprime", "1", "--nu", "2", "--k", "3"});
  EXPECT_EQ(invalid.status, 2);
  EXPECT_EQ(nlohmann::json::parse(invalid.err)["error"]["code"], "InvalidSignature");

  const auto usage = run_cli({"dims", "--m", "x"});
  EXPECT_EQ(usage.status, 2);
  EXPECT_EQ(nlohmann::json::parse(usage.err)["error"]["code"], "UsageError");

  const auto no_germ = run_cli({"check", "--in", fixture("expressions/heisenberg.json")});
  EXPECT_EQ(no_germ.status, 2);
}

TEST(Cli, KeyObservationAndRankConfigs) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto config = dir / "crjet_cli_config.json";
  {
    std::ofstream out(config);
    out << R"({"signature": {"m": 1, "d": 1, "mprime": 1, "nu": 2, "k": 3}, "seed": 5, "trials": 2})";
  }
  const auto keyobs = run_cli({"keyobs", "--config", config.string(), "--json"});
  ASSERT_EQ(keyobs.status, 0) << keyobs.err;
  EXPECT_EQ(nlohmann::json::parse(keyobs.out)["failures"], 0);
  const auto rank = run_cli({"rank", "--config", config.string(), "--json"});
  ASSERT_EQ(rank.status, 0) << rank.err;
  const auto j = nlohmann::json::parse(rank.out);
  EXPECT_EQ(j["trials"].size(), 2u);
  EXPECT_EQ(j["trials"][0]["rows"], 16);
  std::filesystem::remove(config);
}

TEST(Cli, ConfigSchema) {
  EXPECT_THROW(cli::parse_config(R"({"seed": 1})"), Error);
  EXPECT_THROW(cli::parse_config(R"({"signature": {"m": 1, "d": 1, "mprime": 1, "nu": 2, "k": 3}, "bogus": 1})"), Error);
  const auto c = cli::parse_config(
      R"({"signature": {"m": 1, "d": 1, "mprime": 1, "nu": 2, "k": 3}, "fd_step": 1e-5, "threads": 2})");
  EXPECT_EQ(c.fd_step, 1e-5);
  EXPECT_EQ(c.threads, 2u);
}

TEST(Cli, ExpressionCommand) {
  const auto r = run_cli({"expr", "-1/2*i*w1 + 1/2*i*~w1", "--realify"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "v1\n");
  const auto bad = run_cli({"expr", "x1^-1", "--space", "real"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_EQ(nlohmann::json::parse(bad.err)["error"]["code"], "SyntaxError");
}

TEST(Cli, OutputIgnoresTheGlobalLocale) {
  const auto args = std::vector<std::string>{"dims", "--m", "1", "--d", "1", "--mprime", "1", "--nu", "2", "--k", "10"};
  const auto before = run_cli(args);
  const char* previous = std::setlocale(LC_ALL, nullptr);
  const std::string saved = previous ? previous : "C";
  bool switched = false;
  for (const char* name : {"de_DE.UTF-8", "fr_FR.UTF-8", "C.UTF-8"}) {
    if (std::setlocale(LC_ALL, name) != nullptr) {
      try {
        std::locale::global(std::locale(name));
      } catch (const std::exception&) {
        continue;
      }
      switched = true;
      break;
    }
  }
  const auto after = run_cli(args);
  std::setlocale(LC_ALL, saved.c_str());
  std::locale::global(std::locale::classic());
  EXPECT_EQ(before.out, after.out) << (switched ? "locale switched" : "no alternative locale");
}

}  // namespace
}  // namespace crjet
