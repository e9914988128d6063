#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "netrisk/cli.hpp"
#include "testutil.hpp"

using namespace netrisk;
namespace fs = std::filesystem;

namespace {

const std::string kFixtureDir = NETRISK_FIXTURE_DIR;

RunConfig base_config(RunConfig::Cmd cmd) {
  RunConfig cfg;
  cfg.cmd = cmd;
  cfg.exposures_path = kFixtureDir + "/exposures.csv";
  cfg.risk_inputs_path = kFixtureDir + "/risk_inputs.csv";
  cfg.transitions_path = kFixtureDir + "/transitions.csv";
  return cfg;
}

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_config(const RunConfig& cfg) {
  std::ostringstream out;
  std::ostringstream err;
  int status = run(cfg, out, err);
  return {status, out.str(), err.str()};
}

fs::path test_dir() {
  fs::path dir = fs::temp_directory_path() / "netrisk_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace

TEST_CASE("risk on an absent period exits 1 and names it", "[cli]") {
  RunConfig cfg = base_config(RunConfig::Cmd::risk);
  cfg.period = "2099Q1";
  cfg.out_path = (test_dir() / "absent.json").string();
  auto result = run_config(cfg);
  CHECK(result.status == 1);
  CHECK(result.err.find("2099Q1") != std::string::npos);
}

TEST_CASE("usage errors exit 2", "[cli]") {
  SECTION("period and all are exclusive") {
    RunConfig cfg = base_config(RunConfig::Cmd::risk);
    cfg.period = "2005Q1";
    cfg.all = true;
    CHECK(run_config(cfg).status == 2);
  }
  SECTION("a period selector is required") {
    RunConfig cfg = base_config(RunConfig::Cmd::network);
    CHECK(run_config(cfg).status == 2);
  }
  SECTION("format must fit the subcommand") {
    RunConfig cfg = base_config(RunConfig::Cmd::network);
    cfg.period = "2005Q1";
    cfg.format = "svg";
    auto result = run_config(cfg);
    CHECK(result.status == 2);
    CHECK(result.err.find("svg") != std::string::npos);
  }
  SECTION("malformed period label") {
    RunConfig cfg = base_config(RunConfig::Cmd::risk);
    cfg.period = "2005#1";
    CHECK(run_config(cfg).status == 2);
  }
  SECTION("simulate needs a single period") {
    RunConfig cfg = base_config(RunConfig::Cmd::simulate);
    cfg.all = true;
    CHECK(run_config(cfg).status == 2);
  }
}

TEST_CASE("a missing input file exits 1 with the path", "[cli]") {
  RunConfig cfg = base_config(RunConfig::Cmd::risk);
  cfg.period = "2005Q1";
  cfg.exposures_path = kFixtureDir + "/nope.csv";
  auto result = run_config(cfg);
  CHECK(result.status == 1);
  CHECK(result.err.find("nope.csv") != std::string::npos);
}

TEST_CASE("network writes a valid DOT file", "[cli]") {
  RunConfig cfg = base_config(RunConfig::Cmd::network);
  cfg.period = "2005Q1";
  cfg.out_path = (test_dir() / "net.dot").string();
  auto result = run_config(cfg);
  REQUIRE(result.status == 0);
  CHECK(result.out.find("net.dot") != std::string::npos);
  auto info = testutil::validate_dot(slurp(cfg.out_path));
  CHECK(info.nodes == 20);
  CHECK(info.edges == 380);
}

TEST_CASE("network --all writes one file per quarter", "[cli]") {
  RunConfig cfg = base_config(RunConfig::Cmd::network);
  cfg.all = true;
  cfg.out_path = (test_dir() / "panel.dot").string();
  auto result = run_config(cfg);
  REQUIRE(result.status == 0);
  CHECK(fs::exists(test_dir() / "panel_2005Q1.dot"));
  CHECK(fs::exists(test_dir() / "panel_2011Q1.dot"));
  CHECK(result.out.find("panel_2010Q2.dot") != std::string::npos);
}

TEST_CASE("sri defaults to the whole panel and reports the argmax", "[cli]") {
  RunConfig cfg = base_config(RunConfig::Cmd::sri);
  cfg.out_path = (test_dir() / "sri.csv").string();
  auto result = run_config(cfg);
  REQUIRE(result.status == 0);
  CHECK(result.out.find("argmax 2010Q2") != std::string::npos);

  std::string csv = slurp(cfg.out_path);
  CHECK(csv.rfind("period,sri\n", 0) == 0);
  int rows = -1;  // header
  for (char c : csv) rows += c == '\n' ? 1 : 0;
  CHECK(rows == 25);
}

TEST_CASE("sri renders an SVG when asked", "[cli]") {
  RunConfig cfg = base_config(RunConfig::Cmd::sri);
  cfg.format = "svg";
  cfg.out_path = (test_dir() / "sri.svg").string();
  REQUIRE(run_config(cfg).status == 0);
  std::string svg = slurp(cfg.out_path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("Systemic Risk Index") != std::string::npos);
}

TEST_CASE("centrality writes csv or json", "[cli]") {
  RunConfig cfg = base_config(RunConfig::Cmd::centrality);
  cfg.period = "2010Q2";
  cfg.out_path = (test_dir() / "cent.csv").string();
  REQUIRE(run_config(cfg).status == 0);
  CHECK(slurp(cfg.out_path).rfind("country,betweenness\n", 0) == 0);

  cfg.format = "json";
  cfg.out_path = (test_dir() / "cent.json").string();
  REQUIRE(run_config(cfg).status == 0);
  CHECK(slurp(cfg.out_path).find("\"centrality\"") != std::string::npos);
}

TEST_CASE("risk emits the JSON report", "[cli]") {
  RunConfig cfg = base_config(RunConfig::Cmd::risk);
  cfg.period = "2010Q2";
  cfg.out_path = (test_dir() / "risk.json").string();
  auto result = run_config(cfg);
  REQUIRE(result.status == 0);
  std::string json = slurp(cfg.out_path);
  CHECK(json.find("\"nel\"") != std::string::npos);
  CHECK(json.find("\"sri\"") != std::string::npos);
  CHECK(result.out.find("risk 2010Q2") != std::string::npos);
}

TEST_CASE("seeded simulate runs are byte-identical", "[cli]") {
  RunConfig cfg = base_config(RunConfig::Cmd::simulate);
  cfg.period = "2010Q2";
  cfg.trials = 20000;
  cfg.seed = 4242;

  cfg.out_path = (test_dir() / "sim_a.json").string();
  REQUIRE(run_config(cfg).status == 0);
  std::string first = slurp(cfg.out_path);

  cfg.out_path = (test_dir() / "sim_b.json").string();
  REQUIRE(run_config(cfg).status == 0);
  CHECK(first == slurp(cfg.out_path));
  CHECK(first.find("\"analytic_nel\"") != std::string::npos);
}

TEST_CASE("default output names derive from the subcommand", "[cli]") {
  auto cwd = fs::current_path();
  fs::current_path(test_dir());
  RunConfig cfg = base_config(RunConfig::Cmd::sri);
  auto result = run_config(cfg);
  fs::current_path(cwd);
  REQUIRE(result.status == 0);
  CHECK(fs::exists(test_dir() / "sri.csv"));
}
