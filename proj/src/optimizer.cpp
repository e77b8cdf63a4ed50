#include "gcdvss/optimizer.hpp"

#include <cmath>
#include <string>

#include "executor.hpp"
#include "gcdvss/errors.hpp"
#include "gcdvss/kernels.hpp"

namespace gcdvss {

void TuningParams::validate() const {
  auto fail = [](const std::string& what) { throw InvalidParameters("tuning: " + what); };
  if (!(phi > 0.0)) fail("phi must be positive");
  if (!(s_initial > phi)) fail("s_initial must exceed phi");
  if (!(rho1 > 1.0)) fail("rho1 must exceed 1");
  if (!(rho2 > 1.0)) fail("rho2 must exceed 1");
  if (!(lambda >= 0.0)) fail("lambda must be nonnegative");
  if (!(tol_fun > 0.0)) fail("tol_fun must be positive");
  if (max_iter == 0) fail("max_iter must be positive");
  if (max_runs == 0) fail("max_runs must be positive");
}

TuningParams preset_params(Preset preset) {
  TuningParams p;
  switch (preset) {
    case Preset::standard:
      break;
    case Preset::pl1:
      p.phi = p.lambda = 1e-5;
      break;
    case Preset::pl2:
      p.phi = p.lambda = 1e-7;
      break;
  }
  return p;
}

std::string_view preset_name(Preset preset) noexcept {
  switch (preset) {
    case Preset::standard:
      return "default";
    case Preset::pl1:
      return "pl1";
    case Preset::pl2:
      return "pl2";
  }
  return "unknown";
}

Preset parse_preset(std::string_view name) {
  if (name == "default") return Preset::standard;
  if (name == "pl1") return Preset::pl1;
  if (name == "pl2") return Preset::pl2;
  throw ConfigError("unknown preset '" + std::string(name) + "' (expected default, pl1 or pl2)");
}

std::string_view termination_name(Termination t) noexcept {
  return t == Termination::step_threshold ? "step_threshold" : "iteration_cap";
}

std::vector<std::size_t> significant_set(const SimplexPoint& p, std::size_t exclude,
                                         double lambda) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < p.dim(); ++l)
    if (l != exclude && p[l] > lambda) out.push_back(l);
  return out;
}

std::vector<double> build_candidate(const SimplexPoint& p, std::size_t i, Direction direction,
                                    double step, std::span<const std::size_t> sig) {
  std::vector<double> q = p.to_vector();
  const double share = step / static_cast<double>(sig.size());
  if (direction == Direction::plus) {
    q[i] = kernels::settle(p[i], step);
    for (std::size_t l : sig) q[l] = kernels::settle(p[l], -share);
  } else {
    q[i] = kernels::settle(p[i], -step);
    for (std::size_t l : sig) q[l] = kernels::settle(p[l], share);
  }
  return q;
}

namespace {

// Same arithmetic as backoff_feasible_move, with the significant count
// precomputed once per iteration and the candidate built by the kernel.
MoveProposal propose(const SimplexPoint& p, std::size_t above_lambda, std::size_t i,
                     Direction direction, double s_start, double rho, double phi, double lambda,
                     FeasibilityTolerance tol) {
  MoveProposal out{i, direction, s_start, std::nullopt};
  const std::size_t k = above_lambda - (p[i] > lambda ? 1 : 0);
  if (k == 0) return out;

  const auto& kt = kernels::active();
  const std::span<const double> x = p.coords();
  std::vector<double> q(x.size());
  double s = s_start;
  while (s > phi) {
    const double share = s / static_cast<double>(k);
    if (direction == Direction::plus) {
      kt.shift_above(x.data(), q.data(), q.size(), i, lambda, -share);
      q[i] = kernels::settle(x[i], s);
    } else {
      kt.shift_above(x.data(), q.data(), q.size(), i, lambda, share);
      q[i] = kernels::settle(x[i], -s);
    }
    if (is_feasible(q, tol)) {
      out.local_step = s;
      out.candidate = try_make_point(std::move(q), tol);
      return out;
    }
    s /= rho;
  }
  out.local_step = s;
  return out;
}

struct Slot {
  double value = 0.0;
  bool evaluated = false;
};

void check_finite(std::span<const Slot> slots) {
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (!std::isfinite(slots[k].value)) throw NonFiniteObjective(k, slots[k].value);
}

std::vector<double> evaluate_with(detail::Executor& exec, const Objective& objective,
                                  std::span<const MoveProposal> proposals, double incumbent) {
  std::vector<Slot> slots(proposals.size());
  exec.for_each(proposals.size(), [&](std::size_t k) {
    if (proposals[k].skipped()) {
      slots[k].value = incumbent;
    } else {
      slots[k].value = objective(*proposals[k].candidate);
      slots[k].evaluated = true;
    }
  });
  check_finite(slots);
  std::vector<double> values(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) values[k] = slots[k].value;
  return values;
}

std::size_t argmin_lowest(std::span<const double> v) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] < v[best]) best = k;
  return best;
}

double evaluate_incumbent(const Objective& objective, const SimplexPoint& p) {
  const double y = objective(p);
  if (!std::isfinite(y)) throw NonFiniteObjective(std::nullopt, y);
  return y;
}

}  // namespace

MoveProposal backoff_feasible_move(const SimplexPoint& p, std::size_t i, Direction direction,
                                   double s_start, double rho, double phi, double lambda,
                                   FeasibilityTolerance tol) {
  if (i >= p.dim()) throw DimensionMismatch(p.dim(), i + 1);
  if (!(rho > 1.0)) throw InvalidParameters("backoff: rho must exceed 1");
  const std::vector<std::size_t> sig = significant_set(p, i, lambda);
  MoveProposal out{i, direction, s_start, std::nullopt};
  if (sig.empty()) return out;
  double s = s_start;
  while (s > phi) {
    std::vector<double> q = build_candidate(p, i, direction, s, sig);
    if (auto point = try_make_point(std::move(q), tol)) {
      out.local_step = s;
      out.candidate = std::move(point);
      return out;
    }
    s /= rho;
  }
  out.local_step = s;
  return out;
}

std::vector<double> evaluate_proposals(const Objective& objective,
                                       std::span<const MoveProposal> proposals, double incumbent,
                                       unsigned threads) {
  detail::Executor exec(threads);
  return evaluate_with(exec, objective, proposals, incumbent);
}

std::optional<SimplexPoint> select_best(std::span<const double> values_plus,
                                        std::span<const double> values_minus,
                                        std::span<const MoveProposal> proposals_plus,
                                        std::span<const MoveProposal> proposals_minus,
                                        double incumbent) {
  if (values_plus.size() != values_minus.size() || values_plus.empty())
    throw DimensionMismatch(values_plus.size(), values_minus.size());
  if (proposals_plus.size() != values_plus.size())
    throw DimensionMismatch(values_plus.size(), proposals_plus.size());
  if (proposals_minus.size() != values_minus.size())
    throw DimensionMismatch(values_minus.size(), proposals_minus.size());

  const std::size_t k1 = argmin_lowest(values_plus);
  const std::size_t k2 = argmin_lowest(values_minus);
  const double f1 = values_plus[k1];
  const double f2 = values_minus[k2];
  if (!(std::min(f1, f2) < incumbent)) return std::nullopt;
  // A value below the incumbent can only come from a real candidate.
  return f1 < f2 ? proposals_plus[k1].candidate : proposals_minus[k2].candidate;
}

SimplexPoint sparsify(const SimplexPoint& p, double lambda, FeasibilityTolerance tol) {
  const auto& kt = kernels::active();
  const std::span<const double> x = p.coords();
  const std::size_t kept = kt.count_above(x.data(), x.size(), lambda);
  if (kept == x.size()) return p;
  if (kept == 0) throw AllCoordinatesInsignificant(lambda);
  const double garbage = kt.sum_at_or_below(x.data(), x.size(), lambda);
  std::vector<double> out(x.size());
  kt.redistribute(x.data(), out.data(), out.size(), lambda,
                  garbage / static_cast<double>(kept));
  return make_point(std::move(out), tol);
}

namespace {

RunReport run_with(detail::Executor& exec, const Objective& objective, const SimplexPoint& start,
                   const TuningParams& params, double rho, const ExecutionOptions& opts) {
  const std::size_t m = start.dim();
  RunReport report{.final_point = start, .rho = rho};

  SimplexPoint p = start;
  double s = params.s_initial;
  std::vector<MoveProposal> proposals(2 * m);

  for (;;) {
    // Incumbent value, then the 2m moves. Slot k < m is coordinate k plus,
    // slot m + k is coordinate k minus.
    const double y = evaluate_incumbent(objective, p);
    const std::size_t above = kernels::count_above(p.coords(), params.lambda);
    std::vector<Slot> slots(2 * m);
    exec.for_each(2 * m, [&](std::size_t k) {
      const std::size_t i = k % m;
      const Direction dir = k < m ? Direction::plus : Direction::minus;
      proposals[k] = propose(p, above, i, dir, s, rho, params.phi, params.lambda,
                             opts.tolerance);
      if (proposals[k].skipped()) {
        slots[k].value = y;
      } else {
        slots[k].value = objective(*proposals[k].candidate);
        slots[k].evaluated = true;
      }
    });
    check_finite(slots);

    std::uint32_t evals = 1;
    std::vector<double> values(2 * m);
    for (std::size_t k = 0; k < 2 * m; ++k) {
      values[k] = slots[k].value;
      evals += slots[k].evaluated ? 1 : 0;
    }
    report.evaluations += evals;
    report.max_iteration_evaluations = std::max(report.max_iteration_evaluations, evals);
    ++report.iterations;
    if (opts.trace) report.trace.push_back({p, y, s, evals});

    const std::span<const double> vals{values};
    const std::span<const MoveProposal> props{proposals};
    std::optional<SimplexPoint> chosen =
        select_best(vals.first(m), vals.subspan(m), props.first(m), props.subspan(m), y);
    SimplexPoint next = chosen ? sparsify(*chosen, params.lambda, opts.tolerance) : p;

    if (squared_distance(next, p) < params.tol_fun) {
      s /= rho;
      if (s <= params.phi) {
        report.termination = Termination::step_threshold;
        if (bitwise_equal(next, p)) {
          report.final_value = y;
        } else {
          report.final_value = evaluate_incumbent(objective, next);
          ++report.evaluations;
        }
        report.final_point = std::move(next);
        return report;
      }
    }

    if (report.iterations >= params.max_iter) {
      // The cap returns the iterate this iteration started from.
      report.termination = Termination::iteration_cap;
      report.final_point = std::move(p);
      report.final_value = y;
      return report;
    }
    p = std::move(next);
  }
}

}  // namespace

RunReport run_stage1(const Objective& objective, const SimplexPoint& start,
                     const TuningParams& params, double rho, const ExecutionOptions& exec) {
  params.validate();
  if (!(rho > 1.0)) throw InvalidParameters("run: rho must exceed 1");
  if (objective.dim() && *objective.dim() != start.dim())
    throw DimensionMismatch(*objective.dim(), start.dim());
  detail::Executor executor(exec.threads);
  return run_with(executor, objective, start, params, rho, exec);
}

OptimizeResult optimize(const Objective& objective, const SimplexPoint& start,
                        const TuningParams& params, const ExecutionOptions& exec) {
  params.validate();
  if (objective.dim() && *objective.dim() != start.dim())
    throw DimensionMismatch(*objective.dim(), start.dim());
  detail::Executor executor(exec.threads);

  OptimizeResult result{.solution = start};
  result.runs.push_back(run_with(executor, objective, start, params, params.rho1, exec));
  while (result.runs.size() < params.max_runs) {
    const SimplexPoint& previous = result.runs.back().final_point;
    RunReport next = run_with(executor, objective, previous, params, params.rho2, exec);
    const bool repeated = bitwise_equal(next.final_point, previous);
    result.runs.push_back(std::move(next));
    if (repeated) {
      result.converged = true;
      break;
    }
  }

  for (const RunReport& r : result.runs) result.total_evaluations += r.evaluations;
  result.solution = result.runs.back().final_point;
  result.value = result.runs.back().final_value;
  return result;
}

}  // namespace gcdvss
