#include "gcdvss/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "executor.hpp"
#include "gcdvss/benchfns.hpp"
#include "gcdvss/errors.hpp"
#include "gcdvss/kernels.hpp"

namespace gcdvss::harness {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ConfigError("bad value '" + std::string(text) + "' for " + std::string(key));
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError("bad boolean '" + std::string(text) + "' for " + std::string(key));
}

std::string normalize_key(std::string_view key) {
  std::string k{trim(key)};
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw ConfigError("unknown report format '" + std::string(name) + "' (expected csv or json)");
}

unsigned default_concurrency() {
  if (const char* env = std::getenv("GCDVSS_THREADS")) {
    unsigned n = 0;
    const std::string_view v{env};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec == std::errc{} && ptr == v.data() + v.size() && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void CampaignConfig::validate() const {
  if (benchmark.empty()) throw ConfigError("no benchmark function given");
  if (starts < 1) throw ConfigError("starts must be at least 1");
  params.validate();
}

void apply_setting(CampaignConfig& cfg, std::string_view raw_key, std::string_view raw_value) {
  const std::string key = normalize_key(raw_key);
  const std::string_view value = trim(raw_value);
  auto tune = [&](auto& field) {
    field = parse_number<std::remove_reference_t<decltype(field)>>(key, value);
    cfg.preset = "custom";
  };

  if (key == "function") {
    cfg.benchmark = std::string(value);
  } else if (key == "dim") {
    cfg.dim = parse_number<long>(key, value);
  } else if (key == "starts") {
    cfg.starts = parse_number<std::size_t>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "preset") {
    const Preset p = parse_preset(value);
    cfg.preset = std::string(preset_name(p));
    cfg.params = preset_params(p);
  } else if (key == "phi") {
    tune(cfg.params.phi);
  } else if (key == "lambda") {
    tune(cfg.params.lambda);
  } else if (key == "s-initial") {
    tune(cfg.params.s_initial);
  } else if (key == "rho1") {
    tune(cfg.params.rho1);
  } else if (key == "rho2") {
    tune(cfg.params.rho2);
  } else if (key == "max-iter") {
    tune(cfg.params.max_iter);
  } else if (key == "max-runs") {
    tune(cfg.params.max_runs);
  } else if (key == "tol-fun") {
    tune(cfg.params.tol_fun);
  } else if (key == "threads") {
    cfg.concurrency = parse_number<unsigned>(key, value);
  } else if (key == "trace") {
    cfg.trace = parse_bool(key, value);
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else if (key == "output") {
    cfg.output_path = std::string(value);
  } else {
    throw ConfigError("unknown setting '" + std::string(raw_key) + "'");
  }
}

CampaignConfig build_config(const std::vector<Setting>& settings, CampaignConfig base) {
  const Setting* preset = nullptr;
  for (const Setting& s : settings)
    if (normalize_key(s.first) == "preset") preset = &s;
  if (preset) apply_setting(base, preset->first, preset->second);
  for (const Setting& s : settings)
    if (&s != preset && normalize_key(s.first) != "preset") apply_setting(base, s.first, s.second);
  return base;
}

std::vector<Setting> parse_settings(std::string_view text) {
  std::vector<Setting> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    out.emplace_back(std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))));
  }
  return out;
}

CampaignConfig parse_config(std::string_view text, CampaignConfig base) {
  return build_config(parse_settings(text), std::move(base));
}

std::vector<Setting> read_settings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_settings(buf.str());
}

std::uint64_t start_seed(std::uint64_t campaign_seed, std::size_t index) noexcept {
  std::uint64_t z = campaign_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string point_hash(std::span<const double> coords) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : coords) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof v);
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Aggregates aggregate(const std::vector<StartRecord>& records) {
  if (records.empty()) throw ConfigError("a benchmark result needs at least one start");
  Aggregates a;
  a.min_value = std::numeric_limits<double>::infinity();
  double value_sum = 0.0;
  double eval_sum = 0.0;
  double iter_sum = 0.0;
  for (const StartRecord& r : records) {
    a.success_count += r.success ? 1 : 0;
    a.min_value = std::min(a.min_value, r.final_value);
    value_sum += r.final_value;
    eval_sum += static_cast<double>(r.evaluations);
    iter_sum += static_cast<double>(r.iterations);
    a.max_iteration_evaluations = std::max(a.max_iteration_evaluations, r.max_iteration_evaluations);
  }
  const double n = static_cast<double>(records.size());
  a.success_percent = 100.0 * static_cast<double>(a.success_count) / n;
  a.mean_value = value_sum / n;
  a.mean_evals = eval_sum / n;
  a.mean_evals_per_iteration = iter_sum > 0.0 ? eval_sum / iter_sum : 0.0;
  return a;
}

BenchmarkResult run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  const bench::BenchmarkSpec spec = bench::registry_lookup(cfg.benchmark, cfg.dim);

  std::vector<StartRecord> records(cfg.starts);
  for (std::size_t i = 0; i < cfg.starts; ++i) {
    StartRecord& r = records[i];
    r.index = i;
    r.seed = start_seed(cfg.seed, i);
    Rng rng(r.seed);
    r.start = random_simplex_point(spec.dim_simplex, rng).to_vector();
    r.start_hash = point_hash(r.start);
  }

  const auto t0 = std::chrono::steady_clock::now();
  detail::Executor workers(cfg.concurrency ? cfg.concurrency : default_concurrency());
  workers.for_each(records.size(), [&](std::size_t i) {
    StartRecord& r = records[i];
    const Objective objective = spec.objective.with_fresh_counter();
    const OptimizeResult res = optimize(objective, make_point(r.start), cfg.params);
    r.solution = res.solution.to_vector();
    r.final_value = res.value;
    r.evaluations = objective.evaluations();
    r.runs = res.runs.size();
    r.converged = res.converged;
    r.success = spec.success(res.value);
    for (const RunReport& run : res.runs) {
      r.iterations += run.iterations;
      r.max_iteration_evaluations = std::max(r.max_iteration_evaluations, run.max_iteration_evaluations);
      if (cfg.trace)
        r.run_summaries.push_back(
            {run.rho, run.final_value, run.iterations, run.evaluations, run.termination});
    }
  });
  const auto t1 = std::chrono::steady_clock::now();

  BenchmarkResult out;
  out.benchmark = spec.name;
  out.dim = spec.dim;
  out.dim_simplex = spec.dim_simplex;
  out.preset = cfg.preset;
  out.seed = cfg.seed;
  out.params = cfg.params;
  out.known_optimum = spec.known_optimum_value;
  out.success_threshold = spec.success_threshold;
  out.aggregates = aggregate(records);
  out.records = std::move(records);
  out.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  out.isa = std::string(kernels::isa_name(kernels::active().isa));
  return out;
}

}  // namespace gcdvss::harness
