#include "doctest.h"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "gcdvss/errors.hpp"
#include "gcdvss/harness.hpp"
#include "json.hpp"

using namespace gcdvss;
using namespace gcdvss::harness;

namespace {

CampaignConfig small(std::string name, long dim = 0, std::size_t starts = 6) {
  CampaignConfig cfg;
  cfg.benchmark = std::move(name);
  cfg.dim = dim;
  cfg.starts = starts;
  cfg.seed = 5;
  cfg.concurrency = 1;
  return cfg;
}

std::string strip_wall(std::string s) {
  static const std::regex wall("\"wall_seconds\": [^,\\n]*");
  return std::regex_replace(s, wall, "\"wall_seconds\": 0");
}

int run_cli(std::vector<std::string> args, std::string& out, std::string& err) {
  std::vector<const char*> argv = {"gcdvss"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  err = e.str();
  return code;
}

}  // namespace

TEST_CASE("start seeds and hashes are stable") {
  CHECK(start_seed(1, 0) == start_seed(1, 0));
  CHECK(start_seed(1, 0) != start_seed(1, 1));
  CHECK(start_seed(1, 0) != start_seed(2, 0));
  std::vector<double> p = {0.5, 0.5};
  CHECK(point_hash(p).size() == 16);
  CHECK(point_hash(p) == point_hash(std::vector<double>{0.5, 0.5}));
  CHECK(point_hash(p) != point_hash(std::vector<double>{0.25, 0.75}));
}

TEST_CASE("config parsing") {
  auto cfg = parse_config(R"(# campaign
function = power4
dim=10
starts = 7   # inline comment
seed=42
lambda = 1e-4
preset = pl1
max_iter = 900
)");
  CHECK(cfg.benchmark == "power4");
  CHECK(cfg.dim == 10);
  CHECK(cfg.starts == 7);
  CHECK(cfg.seed == 42);
  // preset applies first, later keys override it
  CHECK(cfg.params.phi == 1e-5);
  CHECK(cfg.params.lambda == 1e-4);
  CHECK(cfg.params.max_iter == 900);
  CHECK(cfg.preset == "custom");

  CHECK(parse_config("preset=pl2\n").preset == "pl2");
  CHECK_THROWS_AS(parse_config("bogus=1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("starts=abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("no equals sign\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("preset=pl9\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("format=xml\n"), ConfigError);

  CampaignConfig zero = small("easom");
  zero.starts = 0;
  CHECK_THROWS_AS(zero.validate(), ConfigError);
  CHECK_THROWS_AS(read_settings_file("/nonexistent/cfg.txt"), IoError);
}

TEST_CASE("GCDVSS_THREADS sets the default worker count") {
  setenv("GCDVSS_THREADS", "3", 1);
  CHECK(default_concurrency() == 3);
  setenv("GCDVSS_THREADS", "zero", 1);
  CHECK(default_concurrency() >= 1);
  unsetenv("GCDVSS_THREADS");
}

TEST_CASE("campaign records are consistent") {
  auto res = run_campaign(small("easom"));
  REQUIRE(res.records.size() == 6);
  CHECK(res.dim_simplex == 3);
  for (std::size_t k = 0; k < res.records.size(); ++k) {
    const auto& r = res.records[k];
    CHECK(r.index == k);
    CHECK(r.seed == start_seed(5, k));
    CHECK(r.start_hash == point_hash(r.start));
    CHECK(r.success == (std::fabs(r.final_value - res.known_optimum) < 1e-2));
    CHECK(r.max_iteration_evaluations <= 2 * 3 + 1);
    CHECK(r.final_value >= res.known_optimum - 1e-9);
  }
  CHECK(res.aggregates.mean_evals_per_iteration <= 7.0);
  CHECK(res.aggregates.success_count <= 6);
  CHECK_THROWS_AS(aggregate({}), ConfigError);
}

TEST_CASE("campaign results do not depend on the worker count") {
  for (auto [name, dim] : {std::pair{"easom", 0L}, std::pair{"power4", 8L}}) {
    auto a = small(name, dim, 8);
    auto b = a;
    b.concurrency = 8;
    auto ra = run_campaign(a);
    auto rb = run_campaign(b);
    REQUIRE(ra.records.size() == rb.records.size());
    for (std::size_t k = 0; k < ra.records.size(); ++k) {
      CHECK(std::bit_cast<std::uint64_t>(ra.records[k].final_value) ==
            std::bit_cast<std::uint64_t>(rb.records[k].final_value));
      CHECK(ra.records[k].solution == rb.records[k].solution);
    }
  }
}

TEST_CASE("JSON reports are byte-identical apart from wall time") {
  auto cfg = small("gaussian_max");
  cfg.trace = true;
  std::ostringstream a, b;
  write_json(run_campaign(cfg), a);
  cfg.concurrency = 4;
  write_json(run_campaign(cfg), b);
  CHECK(strip_wall(a.str()) == strip_wall(b.str()));

  auto doc = nlohmann::json::parse(a.str());
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["records"].size() == 6);
  CHECK(doc["records"][0].contains("run_summaries"));
}

TEST_CASE("CSV and JSON carry the same aggregates") {
  auto res = run_campaign(small("power4", 6));
  std::ostringstream csv, js;
  write_csv(res, csv);
  write_json(res, js);
  CHECK(csv.str().rfind(std::string(kCsvHeader), 0) == 0);

  auto row = parse_csv_report(csv.str());
  CHECK(row.benchmark == "power4");
  CHECK(row.dim == 6);
  CHECK(row.preset == "default");
  CHECK(row.seed == 5);
  CHECK(row.starts == 6);
  CHECK(row.success_percent == res.aggregates.success_percent);
  CHECK(row.min_value == res.aggregates.min_value);
  CHECK(row.mean_value == res.aggregates.mean_value);
  CHECK(row.mean_evals == res.aggregates.mean_evals);
  CHECK(row.wall_seconds == res.wall_seconds);

  auto doc = nlohmann::json::parse(js.str());
  const auto& agg = doc["aggregates"];
  CHECK(agg["success_percent"].get<double>() == row.success_percent);
  CHECK(agg["min_value"].get<double>() == row.min_value);
  CHECK(agg["mean_value"].get<double>() == row.mean_value);
  CHECK(agg["mean_evals"].get<double>() == row.mean_evals);

  CHECK_THROWS_AS(parse_csv_report("nope\n"), ConfigError);
}

TEST_CASE("emit_report writes files and reports IO failures") {
  auto res = run_campaign(small("easom", 0, 2));
  const auto path = std::filesystem::temp_directory_path() / "gcdvss_report_test.csv";
  emit_report(res, ReportFormat::csv, path.string());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(parse_csv_report(buf.str()).starts == 2);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(emit_report(res, ReportFormat::json, "/nonexistent/dir/r.json"), IoError);
}

TEST_CASE("cli: bench writes CSV to stdout") {
  std::string out, err;
  CHECK(run_cli({"bench", "--function", "easom", "--starts", "20", "--seed", "7"}, out, err) == 0);
  auto row = parse_csv_report(out);
  CHECK(row.benchmark == "easom");
  CHECK(row.starts == 20);
  CHECK(row.seed == 7);
}

TEST_CASE("cli: optimize power4 from the barycentre") {
  std::string out, err;
  CHECK(run_cli({"optimize", "--function", "power4", "--dim", "5", "--start",
                 "0.2,0.2,0.2,0.2,0.2", "--format", "json"},
                out, err) == 0);
  auto doc = nlohmann::json::parse(out);
  CHECK(doc["value"].get<double>() == doctest::Approx(-5.0));
  CHECK(doc["solution"][4].get<double>() == doctest::Approx(1.0));

  CHECK(run_cli({"optimize", "--function", "power4", "--dim", "5", "--start",
                 "0.2,0.2,0.2,0.2,0.2"},
                out, err) == 0);
  CHECK(out.find("value") != std::string::npos);
}

TEST_CASE("cli: errors exit nonzero with a diagnostic") {
  std::string out, err;
  CHECK(run_cli({"bench", "--function", "nosuch"}, out, err) != 0);
  CHECK(err.find("UnknownBenchmark") != std::string::npos);

  CHECK(run_cli({"bench", "--function", "gaussian_max", "--dim", "3"}, out, err) != 0);
  CHECK(err.find("UnsupportedDimension") != std::string::npos);

  CHECK(run_cli({"bench"}, out, err) != 0);
  CHECK(run_cli({"bench", "--function", "easom", "--bogus"}, out, err) != 0);
  CHECK(run_cli({"optimize", "--function", "easom", "--start", "0.5,0.6,0.1"}, out, err) != 0);
  CHECK(run_cli({"bench", "--function", "easom", "--preset", "pl9"}, out, err) != 0);
}

TEST_CASE("cli: list and config file") {
  std::string out, err;
  CHECK(run_cli({"list"}, out, err) == 0);
  for (auto name : {"gaussian_max", "easom", "sin_nonconvex", "power4", "ackley", "griewank",
                    "rastrigin"})
    CHECK(out.find(name) != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "gcdvss_cfg_test.txt";
  {
    std::ofstream cfg(path);
    cfg << "function = power4\ndim = 5\nstarts = 3\nseed = 9\n";
  }
  CHECK(run_cli({"bench", "--config", path.string(), "--starts", "2"}, out, err) == 0);
  auto row = parse_csv_report(out);
  CHECK(row.benchmark == "power4");
  CHECK(row.starts == 2);
  CHECK(row.seed == 9);
  std::filesystem::remove(path);
}
