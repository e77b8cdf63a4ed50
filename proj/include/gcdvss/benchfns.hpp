#pragma once

// Test problems with known optima, all stored in minimization form.
//
//   name            dim meaning          simplex coords   optimum
//   gaussian_max    2 (fixed)            2                -8 / (0.2 pi) at (0.25, 0.75)
//   easom           3 (fixed)            3                -1 at (1/3, 1/3, 1/3)
//   sin_nonconvex   2 (x, y; fixed)      3                -2 at the image of (2/7, 2/7)
//   power4          n >= 2               n                -n at (0, ..., 0, 1)
//   ackley          d >= 1, box [-5,5]   d + 1            0 at the image of x = 0
//   griewank        d >= 1, [-500,500]   d + 1            0 at the image of x = 0
//   rastrigin       d >= 1, [-5,5]       d + 1            0 at the image of x = 0

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcdvss/objective.hpp"
#include "gcdvss/simplex.hpp"
#include "gcdvss/transforms.hpp"

namespace gcdvss::bench {

inline constexpr double kDefaultSuccessThreshold = 1e-2;

// Simplex-form objectives (minimization).
double gaussian_max(std::span<const double> p);
double modified_easom(std::span<const double> p);
double sin_nonconvex(std::span<const double> y);
double power4(std::span<const double> p);
double ackley_simplex(std::span<const double> y);
double griewank_simplex(std::span<const double> y);
double rastrigin_simplex(std::span<const double> y);

// Box-space reference forms.
double ackley(std::span<const double> x);
// Ackley exactly as commonly misprinted, with 0.5 in place of 1/d. Its
// minimum is e - e^(d/2), which is 0 only for d = 2. Not in the registry.
double ackley_half_weight(std::span<const double> x);
double griewank(std::span<const double> x);
double rastrigin(std::span<const double> x);

// The original maximization form of the x-y problem, for reference.
double sin_nonconvex_xy(double x, double y);

transforms::HypercubeDomain ackley_domain(std::size_t d);
transforms::HypercubeDomain griewank_domain(std::size_t d);
transforms::HypercubeDomain rastrigin_domain(std::size_t d);
// 3x + 2y <= 6
transforms::LinearConstraint sin_nonconvex_constraint();

// sum (p_i - c_i)^2, minimized at c. For convexity checks.
Objective convex_quadratic(std::vector<double> center);

struct BenchmarkSpec {
  std::string name;
  std::size_t dim = 0;          // problem dimension as requested
  std::size_t dim_simplex = 0;  // coordinates the optimizer works with
  Objective objective;
  double known_optimum_value = 0.0;
  std::optional<SimplexPoint> known_optimizer;
  double success_threshold = kDefaultSuccessThreshold;

  bool success(double value) const noexcept;
};

struct FamilyInfo {
  std::string_view name;
  std::string_view description;
  std::size_t default_dim;
  std::size_t min_dim;
  bool fixed_dim;
};

std::span<const FamilyInfo> families() noexcept;

// dim == 0 picks the family default. Throws UnknownBenchmark or
// UnsupportedDimension.
BenchmarkSpec registry_lookup(std::string_view name, long dim = 0);

}  // namespace gcdvss::bench
