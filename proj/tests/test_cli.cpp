#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "evpsim/cli.hpp"
#include "evpsim/io.hpp"

using namespace evpsim;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(EVPSIM_TEST_TMP) + "/" + name; }

std::string write_config(const std::string& name, const std::string& text) {
  const std::string path = tmp(name);
  write_file(path, text);
  return path;
}

const char* kSmall = "n = 10\ncoalition_size = 3\np = 1e-3\nrounds = 2000\nstrategy = selfish\nutility = relative\n"
                     "epsilon = 0.05\nepsilon_prime = 0.05\ntrials = 8\n";

}  // namespace

TEST_CASE("simulate writes a summary with the round count") {
  const std::string cfg = write_config("sim.cfg", kSmall);
  const Run r = cli({"simulate", "--config", cfg, "--out", tmp("sim.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("rounds=2000") != std::string::npos);
  const Json j = Json::parse(read_file(tmp("sim.json")));
  CHECK(j["trace"]["rounds"] == 2000);
  CHECK(j["tool"] == kToolName);
  CHECK(j["version"] == kToolVersion);
  CHECK(j.contains("resolved_experiment"));
}

TEST_CASE("simulate twice with one seed is byte-identical") {
  const std::string cfg = write_config("sim2.cfg", kSmall);
  CHECK(cli({"simulate", "--config", cfg, "--seed", "5", "--out", tmp("a.json")}).code == 0);
  CHECK(cli({"simulate", "--config", cfg, "--seed", "5", "--out", tmp("b.json")}).code == 0);
  CHECK(cli({"simulate", "--config", cfg, "--seed", "6", "--out", tmp("c.json")}).code == 0);
  CHECK(read_file(tmp("a.json")) == read_file(tmp("b.json")));
  CHECK(read_file(tmp("a.json")) != read_file(tmp("c.json")));
}

TEST_CASE("invalid coalition size is a config error") {
  const std::string cfg = write_config("bad.cfg", "n = 4\ncoalition_size = 4\n");
  const Run r = cli({"simulate", "--config", cfg, "--out", tmp("bad.json")});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("1 <= t' <= n-1") != std::string::npos);
}

TEST_CASE("missing files are I/O errors") {
  CHECK(cli({"simulate", "--config", tmp("does-not-exist.cfg")}).code == kExitIo);
  const std::string cfg = write_config("io.cfg", kSmall);
  CHECK(cli({"simulate", "--config", cfg, "--out", "/nonexistent/dir/out.json"}).code == kExitIo);
}

TEST_CASE("bad flags are usage errors") {
  CHECK(cli({}).code == kExitConfig);
  CHECK(cli({"simulate"}).code == kExitConfig);
  CHECK(cli({"evp", "--config", "x", "--format", "xml"}).code == kExitConfig);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("bounds prints the absolute-reward epsilon") {
  const Run r = cli({"bounds", "--theorem", "1", "--delta1", "0.1", "--s", "0.01"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("epsilon=0.414") != std::string::npos);
  const Run named = cli({"bounds", "--theorem", "bitcoin_relative_gap", "--n", "10", "--t-prime", "3", "--s", "0.01"});
  CHECK(named.code == kExitOk);
  CHECK(named.out.find("gap=0.125571") != std::string::npos);
}

TEST_CASE("violated side condition exits with its own code") {
  const Run r = cli({"bounds", "--theorem", "1", "--delta1", "0.2", "--s", "0.3"});
  CHECK(r.code == kExitSideCondition);
  CHECK(r.err.find("4*delta1*(1+s)+s < 1") != std::string::npos);
}

TEST_CASE("evp writes json and csv") {
  const std::string cfg = write_config("evp.cfg", kSmall);
  const Run j = cli({"evp", "--config", cfg, "--out", tmp("evp.json")});
  CHECK(j.code == kExitOk);
  CHECK(j.out.find("violations=") != std::string::npos);
  const Json doc = Json::parse(read_file(tmp("evp.json")));
  CHECK(doc["verdict"]["trials"] == 8);
  CHECK(doc["verdict"]["confidence_interval"]["method"] == "jeffreys");

  const Run c = cli({"evp", "--config", cfg, "--format", "csv", "--trials", "4", "--out", tmp("evp.csv")});
  CHECK(c.code == kExitOk);
  const std::string csv = read_file(tmp("evp.csv"));
  CHECK(csv.rfind("# evpsim 0.1.0", 0) == 0);
  CHECK(csv.find("\ntrial,seed_H,seed_A,U_min_H,U_max_A,violated") != std::string::npos);
  CHECK(csv.find("# trials = 4") != std::string::npos);
}

TEST_CASE("evp output is independent of the worker count") {
  const std::string cfg = write_config("workers.cfg", kSmall);
  CHECK(cli({"evp", "--config", cfg, "--workers", "1", "--out", tmp("w1.json")}).code == 0);
  CHECK(cli({"evp", "--config", cfg, "--workers", "3", "--out", tmp("w3.json")}).code == 0);
  CHECK(read_file(tmp("w1.json")) == read_file(tmp("w3.json")));
}

TEST_CASE("fairness runs") {
  const std::string cfg = write_config("fair.cfg", std::string(kSmall) + "fairness_delta = 0.2\n");
  const Run r = cli({"fairness", "--config", cfg, "--trials", "3", "--out", tmp("fair.json")});
  CHECK(r.code == kExitOk);
  const Json doc = Json::parse(read_file(tmp("fair.json")));
  CHECK(doc["fairness"]["delta"] == 0.2);
  CHECK(doc["fairness"]["rows"].size() == 3);
}

TEST_CASE("oracle enumerates small instances and refuses large ones") {
  const std::string tiny = write_config("tiny.cfg", "n = 2\ncoalition_size = 1\nqueries_per_round = 1\np = 0.5\n"
                                                    "rounds = 1\n");
  const Run ok = cli({"oracle", "--config", tiny, "--out", tmp("tiny.json")});
  CHECK(ok.code == kExitOk);
  CHECK(Json::parse(read_file(tmp("tiny.json")))["exact"]["expected_min"] == 0.5);

  const std::string big = write_config("big.cfg", "n = 2\ncoalition_size = 1\nqueries_per_round = 1\np = 0.5\n"
                                                  "rounds = 11\n");
  const Run refused = cli({"oracle", "--config", big, "--out", tmp("big.json")});
  CHECK(refused.code == kExitConfig);
  CHECK(refused.err.find("4.1943e+06 outcome sequences") != std::string::npos);
}

TEST_CASE("sweep writes one row per grid point") {
  const std::string cfg = write_config("sweep.cfg", std::string(kSmall) + "sweep = coalition_size=1,2,3,4\n");
  const Run r = cli({"sweep", "--config", cfg, "--trials", "3", "--out", tmp("sweep.csv")});
  CHECK(r.code == kExitOk);
  std::istringstream csv(read_file(tmp("sweep.csv")));
  std::vector<std::string> rows;
  for (std::string line; std::getline(csv, line);)
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].rfind("coalition_size,trials,violations,violation_rate,ci_lo,ci_hi", 0) == 0);
  for (int k = 1; k <= 4; ++k) CHECK(rows[static_cast<std::size_t>(k)].rfind(std::to_string(k) + ",3,", 0) == 0);

  const std::string grid = write_config("grid.cfg", std::string(kSmall) + "sweep = coalition_size=1,2; p=1e-3,2e-3,3e-3\n");
  CHECK(cli({"sweep", "--config", grid, "--trials", "2", "--out", tmp("grid.csv")}).code == 0);
  const std::string g = read_file(tmp("grid.csv"));
  CHECK(std::count(g.begin(), g.end(), '\n') - std::count(g.begin(), g.end(), '#') == 7);
}

TEST_CASE("sweep without axes is a config error") {
  const std::string cfg = write_config("nosweep.cfg", kSmall);
  CHECK(cli({"sweep", "--config", cfg, "--out", tmp("nosweep.csv")}).code == kExitConfig);
}
