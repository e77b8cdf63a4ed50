#pragma once

// Greedy coordinate descent with varying step size on the unit simplex.
//
// One iteration looks at 2m moves from the current point p: for every
// coordinate i, push mass `s` into i (plus) or out of i (minus) and spread the
// opposite amount evenly over the coordinates l != i with p_l > lambda. A
// move that leaves the simplex is retried with its local step divided by rho
// until it fits or the step drops to phi. The best strictly improving move is
// taken, then coordinates at or below lambda are zeroed and their mass shared
// among the rest. When two consecutive iterates are closer than tol_fun the
// global step is divided by rho; a run ends once it falls to phi.
//
// optimize() chains runs: the first uses rho1, every later run restarts from
// the previous result with rho2, until two runs in a row return the same point
// or max_runs is reached.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gcdvss/objective.hpp"
#include "gcdvss/simplex.hpp"

namespace gcdvss {

struct TuningParams {
  double s_initial = 1.0;
  double rho1 = 2.0;
  double rho2 = 1.05;
  double phi = 1e-3;     // step size threshold
  double lambda = 1e-3;  // sparsity threshold
  std::uint64_t max_iter = 50000;
  std::uint64_t max_runs = 1000;
  double tol_fun = 1e-15;

  // Throws InvalidParameters unless s_initial > phi > 0, rho1 > 1, rho2 > 1,
  // lambda >= 0, tol_fun > 0 and both limits are positive.
  void validate() const;
};

enum class Preset { standard, pl1, pl2 };

// standard: the defaults above. pl1: lambda = phi = 1e-5. pl2: 1e-7.
TuningParams preset_params(Preset preset);
std::string_view preset_name(Preset preset) noexcept;
// Accepts "default", "pl1", "pl2". Throws ConfigError otherwise.
Preset parse_preset(std::string_view name);

enum class Direction { plus, minus };

struct MoveProposal {
  std::size_t coordinate = 0;
  Direction direction = Direction::plus;
  // Final local step after backoff; for a skipped move, the step at which
  // the search gave up.
  double local_step = 0.0;
  // Empty when no feasible step above phi exists or nothing can absorb the
  // move (empty significant set).
  std::optional<SimplexPoint> candidate;

  bool skipped() const noexcept { return !candidate.has_value(); }
};

enum class Termination { step_threshold, iteration_cap };

std::string_view termination_name(Termination t) noexcept;

struct IterationRecord {
  SimplexPoint point;  // iterate at the start of the iteration
  double value;        // objective at `point`
  double global_step;
  std::uint32_t evaluations;  // objective calls made by this iteration
};

struct RunReport {
  SimplexPoint final_point;
  double final_value = 0.0;
  double rho = 0.0;
  std::uint64_t iterations = 0;
  // All objective calls of the run, including the rare extra call needed
  // when the run stops on a point whose value was not yet known.
  std::uint64_t evaluations = 0;
  std::uint32_t max_iteration_evaluations = 0;
  Termination termination = Termination::step_threshold;
  std::vector<IterationRecord> trace{};  // filled only when requested
};

struct OptimizeResult {
  SimplexPoint solution;
  double value = 0.0;
  std::vector<RunReport> runs{};
  std::uint64_t total_evaluations = 0;
  // Two consecutive runs returned bitwise-identical points.
  bool converged = false;
};

struct ExecutionOptions {
  // Worker threads for the 2m candidate evaluations of an iteration. The
  // iterate sequence does not depend on this value.
  unsigned threads = 1;
  bool trace = false;
  FeasibilityTolerance tolerance{};
};

// {l != exclude : p_l > lambda}, ascending.
std::vector<std::size_t> significant_set(const SimplexPoint& p, std::size_t exclude,
                                         double lambda);

// Raw (possibly infeasible) move of `step` into (plus) or out of (minus)
// coordinate i, balanced evenly over `sig`. Requires sig nonempty, i not in sig.
std::vector<double> build_candidate(const SimplexPoint& p, std::size_t i, Direction direction,
                                    double step, std::span<const std::size_t> sig);

MoveProposal backoff_feasible_move(const SimplexPoint& p, std::size_t i, Direction direction,
                                   double s_start, double rho, double phi, double lambda,
                                   FeasibilityTolerance tol = {});

// Objective value of each candidate; the incumbent value for skipped ones.
// Throws NonFiniteObjective naming the lowest offending proposal.
std::vector<double> evaluate_proposals(const Objective& objective,
                                       std::span<const MoveProposal> proposals,
                                       double incumbent, unsigned threads = 1);

// Greedy choice between the best plus and best minus move. Ties inside a
// direction go to the lowest coordinate; the minus move wins unless the plus
// value is strictly smaller. Empty unless the winner beats the incumbent.
std::optional<SimplexPoint> select_best(std::span<const double> values_plus,
                                        std::span<const double> values_minus,
                                        std::span<const MoveProposal> proposals_plus,
                                        std::span<const MoveProposal> proposals_minus,
                                        double incumbent);

// Zeroes coordinates <= lambda and spreads their total evenly over the
// others. Throws AllCoordinatesInsignificant if nothing is left.
SimplexPoint sparsify(const SimplexPoint& p, double lambda, FeasibilityTolerance tol = {});

// One run from `start` with decay rate `rho`.
RunReport run_stage1(const Objective& objective, const SimplexPoint& start,
                     const TuningParams& params, double rho, const ExecutionOptions& exec = {});

OptimizeResult optimize(const Objective& objective, const SimplexPoint& start,
                        const TuningParams& params, const ExecutionOptions& exec = {});

}  // namespace gcdvss
