#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "opinfo_cli/app.hpp"
#include "opinfo_cli/config.hpp"
#include "opinfo_cli/suites.hpp"

using opinfo::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp_dir() {
  const char* env = std::getenv("OPINFO_TEST_TMP");
  return env ? std::filesystem::path(env) : std::filesystem::temp_directory_path();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({"rates", "--state", "pure"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"rates", "--theory", "classical:2", "--state", "diag:0.5"}).code == 2);
  CHECK(call({"rates", "--theory", "classical:2", "--state", "wobble"}).code == 2);
  CHECK(call({"rates", "--theory", "qutrit", "--state", "pure"}).code == 2);
  CHECK(call({"rates", "--theory", "classical:2", "--state", "pure", "--format", "xml"}).code == 2);
  CHECK(call({"verify", "--suite", "nope"}).code == 2);
  const auto sq = call({"steering-demo", "--theory", "squit"});
  CHECK(sq.code == 3);
  CHECK(sq.err.find("squit") != std::string::npos);
  CHECK(call({"rates", "--theory", "quantum:2", "--state", "pure", "--family", "all_projective", "--N", "40"}).code == 3);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("rates: header, Shannon example and pure preset") {
  const auto r = call({"rates", "--theory", "classical:2", "--state", "diag:0.89,0.11", "--N", "1000", "--eps", "0.05"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("experiment,theory,state_id,N,M,epsilon,criterion,value,bound_direction,seed\n", 0) == 0);
  CHECK(r.out.find("rates,classical:2,\"diag:0.89,0.11\",1000,552,0.05,rate,0.552,upper,1\n") != std::string::npos);

  const auto p = call({"rates", "--theory", "quantum:2", "--state", "pure", "--N", "10,100"});
  REQUIRE(p.code == 0);
  std::istringstream lines(p.out);
  std::string line;
  int rate_rows = 0;
  while (std::getline(lines, line)) {
    if (line.find(",rate,") != std::string::npos) {
      ++rate_rows;
      CHECK(line.find(",rate,0,upper,") != std::string::npos);
    }
  }
  CHECK(rate_rows == 2);
}

TEST_CASE("every row carries a bound direction") {
  const auto r = call({"entropy-compare", "--theory", "squit", "--restarts", "2", "--max-evals", "300"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    const bool ok = line.find(",exact,") != std::string::npos || line.find(",upper,") != std::string::npos ||
                    line.find(",lower,") != std::string::npos;
    CHECK(ok);
  }
  CHECK(rows > 0);
  CHECK(r.out.find("squit,center,,,,decomposition_entropy,1,upper,1") != std::string::npos);
}

TEST_CASE("entropy-compare: qubit diag(0.9,0.1)") {
  const auto r = call({"entropy-compare", "--theory", "quantum:2", "--state", "diag:0.9,0.1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("measurement_entropy,0.468995593589,upper") != std::string::npos);
  CHECK(r.out.find("decomposition_entropy,0.468995593589,upper") != std::string::npos);
  CHECK(r.out.find("accessible_information,1,lower") != std::string::npos);
}

TEST_CASE("byte-identical output for identical config and seed") {
  const std::vector<std::string> args{"verify", "--suite", "fuchs,bridges", "--trials", "5", "--seed", "9"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const std::vector<std::string> j{"fidelity-bounds", "--theory", "squit", "--format", "json", "--trials", "5"};
  CHECK(call(j).out == call(j).out);
}

TEST_CASE("verify filtering and the negative control") {
  const auto f = call({"verify", "--suite", "fuchs", "--trials", "10"});
  CHECK(f.code == 0);
  CHECK(f.out.find(",fuchs,") != std::string::npos);
  CHECK(f.out.find(",norm,") == std::string::npos);
  const auto bad = call({"verify", "--suite", "validity", "--trials", "10", "--inject-fault"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("verify,all,validity,,,,violations,1,exact,1") != std::string::npos);
}

TEST_CASE("JSON report echoes the config") {
  const auto r = call({"steering-demo", "--theory", "quantum:2", "--format", "json", "--seed", "3"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["config"]["theory"] == "quantum:2");
  CHECK(doc["config"]["seed"] == 3);
  CHECK(doc["config"]["subcommand"] == "steering-demo");
  REQUIRE(doc["rows"].is_array());
  for (const auto& row : doc["rows"]) {
    CHECK(row["seed"] == 3);
    if (row["criterion"] == "max_residual") CHECK(row["value"].get<double>() < 1e-12);
  }
}

TEST_CASE("config file mirrors flags; flags override") {
  const auto path = tmp_dir() / "opinfo_test_config.toml";
  {
    std::ofstream f(path);
    f << "theory = \"classical:2\"\nstate = \"diag:0.89,0.11\"\nN = [100]\neps = [0.05]\nseed = 4\n";
  }
  const auto a = call({"rates", "--config", path.string()});
  REQUIRE(a.code == 0);
  CHECK(a.out.find(",100,63,0.05,rate,0.63,upper,4") != std::string::npos);
  const auto b = call({"rates", "--config", path.string(), "--seed", "7", "--state", "pure"});
  REQUIRE(b.code == 0);
  CHECK(b.out.find(",pure,100,0,0.05,rate,0,upper,7") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = tmp_dir() / "opinfo_test_out.csv";
  const auto r = call({"steering-demo", "--theory", "classical:3", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("max_residual,0,exact") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("state specs") {
  using opinfo::SystemLabel;
  using opinfo::cli::parse_state_spec;
  CHECK(parse_state_spec(SystemLabel::squit(), "center").coords(0) == 0.0);
  CHECK(parse_state_spec(SystemLabel::quantum(2), "bloch:0,0,1").coords.size() == 4);
  CHECK_THROWS_AS(parse_state_spec(SystemLabel::quantum(2), "bloch:2,0,0"), opinfo::cli::UsageError);
  CHECK_THROWS_AS(parse_state_spec(SystemLabel::classical(2), "xy:0,0"), opinfo::cli::UsageError);
  CHECK_THROWS_AS(parse_state_spec(SystemLabel::classical(2), "diag:0.5,x"), opinfo::cli::UsageError);
}

TEST_CASE("every suite passes on a small budget") {
  opinfo::cli::SuiteOptions o;
  o.trials = 4;
  o.seed = 77;
  for (const auto& name : opinfo::cli::suite_names()) {
    CAPTURE(name);
    CHECK(opinfo::cli::run_suite(name, o).passed());
  }
}
