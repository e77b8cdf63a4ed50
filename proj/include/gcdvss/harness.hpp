#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcdvss/optimizer.hpp"

namespace gcdvss::harness {

enum class ReportFormat { csv, json };

ReportFormat parse_format(std::string_view name);

// Worker count used when a campaign does not set one: GCDVSS_THREADS if it
// holds a positive integer, otherwise the hardware concurrency.
unsigned default_concurrency();

struct CampaignConfig {
  std::string benchmark;
  long dim = 0;  // 0 = family default
  std::size_t starts = 100;
  std::uint64_t seed = 1;
  // Label reported alongside the numbers; "custom" once any tuning field is
  // overridden.
  std::string preset = "default";
  TuningParams params = preset_params(Preset::standard);
  unsigned concurrency = 0;  // 0 = default_concurrency()
  bool trace = false;        // keep per-run summaries in the JSON report
  ReportFormat format = ReportFormat::csv;
  std::string output_path;  // empty or "-" = standard output

  // Throws ConfigError / InvalidParameters.
  void validate() const;
};

using Setting = std::pair<std::string, std::string>;

// Keys mirror the long CLI flags without the leading dashes: function, dim,
// starts, seed, preset, phi, lambda, s-initial, rho1, rho2, max-iter,
// max-runs, tol-fun, threads, trace, format, output. Underscores are
// accepted in place of dashes.
void apply_setting(CampaignConfig& cfg, std::string_view key, std::string_view value);

// Applies settings in order, except that the last "preset" goes first:
// a preset resets every tuning field, individual keys then override it.
CampaignConfig build_config(const std::vector<Setting>& settings, CampaignConfig base = {});

// Flat key=value text; '#' starts a comment, blank lines are ignored.
std::vector<Setting> parse_settings(std::string_view text);
CampaignConfig parse_config(std::string_view text, CampaignConfig base = {});
std::vector<Setting> read_settings_file(const std::string& path);

// Per-start seed: a splitmix64 step keyed by campaign seed and start index.
std::uint64_t start_seed(std::uint64_t campaign_seed, std::size_t index) noexcept;

// FNV-1a over the coordinate bytes, as 16 hex digits.
std::string point_hash(std::span<const double> coords);

struct RunSummary {
  double rho;
  double final_value;
  std::uint64_t iterations;
  std::uint64_t evaluations;
  Termination termination;
};

struct StartRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string start_hash;
  std::vector<double> start;
  std::vector<double> solution;
  double final_value = 0.0;
  std::uint64_t evaluations = 0;  // from the objective's call counter
  std::uint64_t iterations = 0;
  std::uint64_t runs = 0;
  std::uint32_t max_iteration_evaluations = 0;
  bool converged = false;
  bool success = false;
  std::vector<RunSummary> run_summaries;  // only when tracing
};

struct Aggregates {
  std::size_t success_count = 0;
  double success_percent = 0.0;
  double min_value = 0.0;
  double mean_value = 0.0;
  double mean_evals = 0.0;
  double mean_evals_per_iteration = 0.0;
  std::uint32_t max_iteration_evaluations = 0;
};

struct BenchmarkResult {
  std::string benchmark;
  std::size_t dim = 0;
  std::size_t dim_simplex = 0;
  std::string preset;
  std::uint64_t seed = 0;
  TuningParams params;
  double known_optimum = 0.0;
  double success_threshold = 0.0;
  std::vector<StartRecord> records;
  Aggregates aggregates;
  double wall_seconds = 0.0;
  std::string isa;  // kernel variant that produced the numbers
};

// Recomputes the aggregates from records. Throws ConfigError when empty.
Aggregates aggregate(const std::vector<StartRecord>& records);

BenchmarkResult run_campaign(const CampaignConfig& cfg);

void write_csv(const BenchmarkResult& result, std::ostream& os);
void write_json(const BenchmarkResult& result, std::ostream& os);
// Writes to cfg-style path ("" or "-" = stdout). Throws IoError.
void emit_report(const BenchmarkResult& result, ReportFormat format, const std::string& path);

// Fields of one CSV data row, for reading reports back.
struct CsvRow {
  std::string benchmark;
  std::size_t dim = 0;
  std::string preset;
  std::uint64_t seed = 0;
  std::size_t starts = 0;
  double success_percent = 0.0;
  double min_value = 0.0;
  double mean_value = 0.0;
  double mean_evals = 0.0;
  double wall_seconds = 0.0;
};

inline constexpr std::string_view kCsvHeader =
    "benchmark,dim,preset,seed,starts,success_percent,min_value,mean_value,mean_evals,"
    "wall_seconds";

CsvRow parse_csv_report(std::string_view text);

// Entry point of the command line tool. Returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcdvss::harness
