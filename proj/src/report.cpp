#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcdvss/errors.hpp"
#include "gcdvss/harness.hpp"

namespace gcdvss::harness {
namespace {

// Shortest text that reads back to the same double.
std::string num(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

nlohmann::json params_json(const TuningParams& p) {
  return {{"s_initial", p.s_initial}, {"rho1", p.rho1},         {"rho2", p.rho2},
          {"phi", p.phi},             {"lambda", p.lambda},     {"max_iter", p.max_iter},
          {"max_runs", p.max_runs},   {"tol_fun", p.tol_fun}};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const std::size_t at = s.find(sep);
    out.push_back(s.substr(0, at));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

template <class T>
T field(std::string_view text, const char* name) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError(std::string("csv report: bad ") + name + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

void write_csv(const BenchmarkResult& r, std::ostream& os) {
  const Aggregates& a = r.aggregates;
  os << kCsvHeader << '\n'
     << r.benchmark << ',' << r.dim << ',' << r.preset << ',' << r.seed << ',' << r.records.size()
     << ',' << num(a.success_percent) << ',' << num(a.min_value) << ',' << num(a.mean_value) << ','
     << num(a.mean_evals) << ',' << num(r.wall_seconds) << '\n';
}

void write_json(const BenchmarkResult& r, std::ostream& os) {
  using nlohmann::json;
  const Aggregates& a = r.aggregates;

  json records = json::array();
  for (const StartRecord& s : r.records) {
    json rec = {{"index", s.index},
                {"seed", s.seed},
                {"start_hash", s.start_hash},
                {"start", s.start},
                {"solution", s.solution},
                {"final_value", s.final_value},
                {"evaluations", s.evaluations},
                {"iterations", s.iterations},
                {"runs", s.runs},
                {"max_iteration_evaluations", s.max_iteration_evaluations},
                {"converged", s.converged},
                {"success", s.success}};
    if (!s.run_summaries.empty()) {
      json runs = json::array();
      for (const RunSummary& run : s.run_summaries)
        runs.push_back({{"rho", run.rho},
                        {"final_value", run.final_value},
                        {"iterations", run.iterations},
                        {"evaluations", run.evaluations},
                        {"termination", termination_name(run.termination)}});
      rec["run_summaries"] = std::move(runs);
    }
    records.push_back(std::move(rec));
  }

  const json doc = {{"schema_version", 1},
                    {"benchmark", r.benchmark},
                    {"dim", r.dim},
                    {"dim_simplex", r.dim_simplex},
                    {"preset", r.preset},
                    {"seed", r.seed},
                    {"starts", r.records.size()},
                    {"params", params_json(r.params)},
                    {"known_optimum", r.known_optimum},
                    {"success_threshold", r.success_threshold},
                    {"isa", r.isa},
                    {"aggregates",
                     {{"success_count", a.success_count},
                      {"success_percent", a.success_percent},
                      {"min_value", a.min_value},
                      {"mean_value", a.mean_value},
                      {"mean_evals", a.mean_evals},
                      {"mean_evals_per_iteration", a.mean_evals_per_iteration},
                      {"max_iteration_evaluations", a.max_iteration_evaluations}}},
                    {"wall_seconds", r.wall_seconds},
                    {"records", std::move(records)}};
  os << doc.dump(2) << '\n';
}

void emit_report(const BenchmarkResult& result, ReportFormat format, const std::string& path) {
  if (result.records.empty()) throw ConfigError("refusing to write a report with no starts");
  auto write = [&](std::ostream& os) {
    if (format == ReportFormat::csv)
      write_csv(result, os);
    else
      write_json(result, os);
  };
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing report to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write(out);
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

CsvRow parse_csv_report(std::string_view text) {
  const std::vector<std::string_view> lines = split(text, '\n');
  if (lines.size() < 2 || lines[0] != kCsvHeader)
    throw ConfigError("csv report: missing or unexpected header");
  const std::vector<std::string_view> f = split(lines[1], ',');
  if (f.size() != 10) throw ConfigError("csv report: expected 10 columns");
  CsvRow row;
  row.benchmark = std::string(f[0]);
  row.dim = field<std::size_t>(f[1], "dim");
  row.preset = std::string(f[2]);
  row.seed = field<std::uint64_t>(f[3], "seed");
  row.starts = field<std::size_t>(f[4], "starts");
  row.success_percent = field<double>(f[5], "success_percent");
  row.min_value = field<double>(f[6], "min_value");
  row.mean_value = field<double>(f[7], "mean_value");
  row.mean_evals = field<double>(f[8], "mean_evals");
  row.wall_seconds = field<double>(f[9], "wall_seconds");
  return row;
}

}  // namespace gcdvss::harness
