#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "slowmode/errors.hpp"
#include "slowmode/experiment.hpp"

using namespace slowmode;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kTmp = "test_experiment_out";

}  // namespace

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(validate_descriptor(json::array()), ValidationError);
  CHECK_THROWS_AS(validate_descriptor(json{{"engine", "automaton"}}), ValidationError);
  CHECK_THROWS_AS(validate_descriptor(json{{"experiment_id", "x"}, {"engine", "warp"}}),
                  ValidationError);
  json bad_grid = {{"experiment_id", "x"},
                   {"engine", "hydro"},
                   {"times", {{"t_min", 10.0}, {"t_max", 1.0}}}};
  CHECK_THROWS_AS(validate_descriptor(bad_grid), ValidationError);
  json zero_samples = {{"experiment_id", "x"},  {"engine", "automaton"}, {"model", "u1_half"},
                       {"L", 4},                {"t_max", 5},            {"n_samples", 0},
                       {"probe_sites", {1, 2}}};
  CHECK_THROWS_AS(run_experiment(zero_samples, kTmp), ValidationError);
}

TEST_CASE("oracle run produces series files and a sidecar") {
  json d = {{"experiment_id", "oracle_smoke"},
            {"engine", "automaton"},
            {"model", "u1_half"},
            {"L", 4},
            {"observable", "oracle_autocorrelation"},
            {"t_max", 10},
            {"probe_sites", {1, 3}}};
  const auto bundle = run_experiment(d, kTmp);
  CHECK(bundle.csv_files.size() == 2);
  for (const auto& f : bundle.csv_files) CHECK(std::filesystem::exists(f));
  CHECK(std::filesystem::exists(bundle.sidecar_file));
  const auto series = read_csv(bundle.csv_files[0]);
  CHECK(series.size() == 11);
  CHECK(series.values[0] == doctest::Approx(1.0));
}

TEST_CASE("identical descriptor and seed give byte-identical outputs") {
  json d = {{"experiment_id", "repro"},
            {"engine", "automaton"},
            {"model", "tjz"},
            {"L", 4},
            {"impurity", {{"kind", "state_flip"}, {"sites", {"L"}}}},
            {"t_max", 20},
            {"n_samples", 5000},
            {"seed", 321},
            {"probe_sites", {1}}};
  const auto a = run_experiment(d, kTmp);
  const std::string bytes_a = read_file(a.csv_files[0]);
  const auto b = run_experiment(d, kTmp);
  CHECK(read_file(b.csv_files[0]) == bytes_a);
  CHECK(a.provenance == b.provenance);
}

TEST_CASE("site placeholders resolve against L") {
  json d = {{"experiment_id", "placeholders"},
            {"engine", "automaton"},
            {"model", "dip_one_h3"},
            {"L", 6},
            {"impurity", {{"kind", "state_flip"}, {"sites", {"L-1", "L"}}}},
            {"observable", "krylov"}};
  const auto bundle = run_experiment(d, kTmp);
  const std::string counts = read_file(bundle.csv_files[1]);
  CHECK(counts.find("\n1\n") != std::string::npos);  // fully connected
}

TEST_CASE("hydro and superham engines run end to end") {
  json h = {{"experiment_id", "hydro_smoke"},
            {"engine", "hydro"},
            {"model", "u1"},
            {"L", 32},
            {"bc", "obc"},
            {"impurity", {{"site", 1}, {"g", 1.0}}},
            {"probe_sites", {4, 8}},
            {"times", {{"kind", "log"}, {"t_min", 1.0}, {"t_max", 100.0}, {"per_decade", 10}}}};
  CHECK(run_experiment(h, kTmp).csv_files.size() == 2);

  json s = {{"experiment_id", "super_smoke"},
            {"engine", "superham"},
            {"model", "tjz"},
            {"L", 4},
            {"impurity", {{"kind", "state_flip"}, {"sites", {"L"}}}},
            {"g", 1.0},
            {"operation", "gap"}};
  const auto bundle = run_experiment(s, kTmp);
  const auto table = read_file(bundle.csv_files[0]);
  CHECK(table.rfind("L,gap", 0) == 0);
}

TEST_CASE("compare: identical series pass, shifted ones fail, grids must match") {
  CorrelationSeries a;
  a.times = {0, 1, 2};
  a.values = {1.0, 0.5, 0.2};
  a.std_errors = {0.01, 0.01, 0.01};
  const auto self = compare_series(a, a, 4.0, 0.99);
  CHECK(self.pass);
  CHECK(self.max_z == 0.0);

  CorrelationSeries b = a;
  b.values[1] += 0.2;  // 14 sigma away
  CHECK_FALSE(compare_series(a, b, 4.0, 0.99).pass);

  CorrelationSeries c = a;
  c.times[2] = 3;
  CHECK_THROWS_AS(compare_series(a, c, 4.0, 0.99), GridMismatch);
}
