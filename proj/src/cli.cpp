#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcdvss/benchfns.hpp"
#include "gcdvss/errors.hpp"
#include "gcdvss/harness.hpp"
#include "gcdvss/kernels.hpp"

namespace gcdvss::harness {
namespace {

std::string num(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::string_view rest{text};
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw ConfigError("bad coordinate '" + std::string(item) + "' in --start");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

// Flags shared by bench and optimize; each one given on the command line
// becomes a key=value setting so they layer over a config file.
struct SharedFlags {
  struct Flag {
    const char* key;
    std::string value;
    CLI::Option* opt = nullptr;
  };
  std::vector<Flag> flags{{"function", {}}, {"dim", {}},       {"preset", {}},   {"phi", {}},
                          {"lambda", {}},   {"s-initial", {}}, {"rho1", {}},     {"rho2", {}},
                          {"max-iter", {}}, {"max-runs", {}},  {"tol-fun", {}},  {"threads", {}},
                          {"format", {}},   {"output", {}}};
  bool trace = false;
  CLI::Option* trace_opt = nullptr;

  void attach(CLI::App& app) {
    for (Flag& f : flags) f.opt = app.add_option(std::string("--") + f.key, f.value);
    flags[0].opt->description("benchmark name (see `list`)");
    flags[1].opt->description("problem dimension; 0 or absent picks the family default");
    flags[2].opt->description("default, pl1 or pl2");
    flags[11].opt->description("worker threads");
    flags[12].opt->description("csv or json");
    flags[13].opt->description("report path, '-' for standard output");
    trace_opt = app.add_flag("--trace", trace, "keep per-run summaries");
  }

  void collect(std::vector<Setting>& out) const {
    for (const Flag& f : flags)
      if (f.opt->count() > 0) out.emplace_back(f.key, f.value);
    if (trace_opt->count() > 0) out.emplace_back("trace", trace ? "true" : "false");
  }
};

int run_list(std::ostream& out) {
  out << "name            default_dim  min_dim  description\n";
  for (const bench::FamilyInfo& f : bench::families()) {
    std::string name{f.name};
    name.resize(16, ' ');
    std::string def = std::to_string(f.default_dim) + (f.fixed_dim ? " (fixed)" : "");
    def.resize(13, ' ');
    std::string min = std::to_string(f.min_dim);
    min.resize(9, ' ');
    out << name << def << min << f.description << '\n';
  }
  out << "simd kernels: " << kernels::isa_name(kernels::active().isa) << '\n';
  return 0;
}

int run_optimize(const CampaignConfig& cfg, const std::string& start_text, std::ostream& out) {
  cfg.params.validate();
  const bench::BenchmarkSpec spec = bench::registry_lookup(cfg.benchmark, cfg.dim);
  const SimplexPoint start =
      start_text.empty() ? uniform_point(spec.dim_simplex) : make_point(parse_vector(start_text));
  if (start.dim() != spec.dim_simplex) throw DimensionMismatch(spec.dim_simplex, start.dim());

  ExecutionOptions exec;
  exec.threads = cfg.concurrency ? cfg.concurrency : 1;
  const OptimizeResult res = optimize(spec.objective, start, cfg.params, exec);

  if (cfg.format == ReportFormat::json) {
    nlohmann::json runs = nlohmann::json::array();
    for (const RunReport& r : res.runs)
      runs.push_back({{"rho", r.rho},
                      {"final_value", r.final_value},
                      {"iterations", r.iterations},
                      {"evaluations", r.evaluations},
                      {"termination", termination_name(r.termination)}});
    nlohmann::json doc = {{"schema_version", 1},
                          {"benchmark", spec.name},
                          {"dim", spec.dim},
                          {"start", start.to_vector()},
                          {"solution", res.solution.to_vector()},
                          {"value", res.value},
                          {"known_optimum", spec.known_optimum_value},
                          {"success", spec.success(res.value)},
                          {"converged", res.converged},
                          {"total_evaluations", res.total_evaluations}};
    if (cfg.trace) doc["runs"] = std::move(runs);
    out << doc.dump(2) << '\n';
    return 0;
  }

  out << "solution:";
  for (double v : res.solution.coords()) out << ' ' << num(v);
  out << "\nvalue: " << num(res.value) << "\nknown optimum: " << num(spec.known_optimum_value)
      << "\nruns: " << res.runs.size() << (res.converged ? " (converged)" : " (run limit)")
      << "\nevaluations: " << res.total_evaluations << '\n';
  if (cfg.trace)
    for (std::size_t k = 0; k < res.runs.size(); ++k) {
      const RunReport& r = res.runs[k];
      out << "run " << k + 1 << ": rho=" << num(r.rho) << " value=" << num(r.final_value)
          << " iterations=" << r.iterations << " evaluations=" << r.evaluations << ' '
          << termination_name(r.termination) << '\n';
    }
  return 0;
}

int run_bench(const CampaignConfig& cfg, std::ostream& out) {
  const BenchmarkResult result = run_campaign(cfg);
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    if (cfg.format == ReportFormat::csv)
      write_csv(result, out);
    else
      write_json(result, out);
  } else {
    emit_report(result, cfg.format, cfg.output_path);
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy coordinate descent with varying step size on the unit simplex", "gcdvss"};
  app.require_subcommand(1);

  CLI::App* list = app.add_subcommand("list", "print the benchmark registry");

  CLI::App* bench_cmd = app.add_subcommand("bench", "run a seeded multi-start campaign");
  SharedFlags bench_flags;
  bench_flags.attach(*bench_cmd);
  std::string starts;
  std::string seed;
  std::string config_path;
  CLI::Option* starts_opt = bench_cmd->add_option("--starts", starts, "random starting points");
  CLI::Option* seed_opt = bench_cmd->add_option("--seed", seed, "campaign seed");
  bench_cmd->add_option("--config", config_path, "key=value file; flags override it");

  CLI::App* opt_cmd = app.add_subcommand("optimize", "single optimization from a start vector");
  SharedFlags opt_flags;
  opt_flags.attach(*opt_cmd);
  std::string start_text;
  opt_cmd->add_option("--start", start_text, "comma-separated start point (default: barycentre)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (list->parsed()) return run_list(out);

    std::vector<Setting> settings;
    if (bench_cmd->parsed()) {
      if (!config_path.empty()) settings = read_settings_file(config_path);
      bench_flags.collect(settings);
      if (starts_opt->count() > 0) settings.emplace_back("starts", starts);
      if (seed_opt->count() > 0) settings.emplace_back("seed", seed);
      CampaignConfig cfg = build_config(settings);
      if (cfg.benchmark.empty()) {
        err << bench_cmd->help() << "error: --function is required\n";
        return 2;
      }
      return run_bench(cfg, out);
    }

    opt_flags.collect(settings);
    CampaignConfig cfg = build_config(settings);
    if (cfg.benchmark.empty()) {
      err << opt_cmd->help() << "error: --function is required\n";
      return 2;
    }
    return run_optimize(cfg, start_text, out);
  } catch (const UnknownBenchmark& e) {
    err << "error: " << e.what() << " (UnknownBenchmark)\n";
    return 1;
  } catch (const UnsupportedDimension& e) {
    err << "error: " << e.what() << " (UnsupportedDimension)\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace gcdvss::harness
