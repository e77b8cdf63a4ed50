#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace gcdvss {

using Rng = std::mt19937_64;

inline constexpr double kDefaultSumTolerance = 1e-9;

// Absolute tolerance on |sum(coords) - 1|.
class FeasibilityTolerance {
public:
  constexpr FeasibilityTolerance() = default;
  explicit FeasibilityTolerance(double sum_tol);

  constexpr double sum_tol() const noexcept { return sum_tol_; }

private:
  double sum_tol_ = kDefaultSumTolerance;
};

/// A point of the unit simplex: m >= 2 nonnegative coordinates summing to
/// one within the feasibility tolerance it was built with.
///
/// Immutable once built. The only ways in are make_point / try_make_point,
/// which store the coordinates verbatim; nothing is ever renormalized.
class SimplexPoint {
public:
  std::span<const double> coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

  // Copies the coordinates out, e.g. to build a perturbed raw vector.
  std::vector<double> to_vector() const { return coords_; }

  // Coordinate-wise ==, so 0.0 and -0.0 compare equal.
  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

private:
  explicit SimplexPoint(std::vector<double> coords) : coords_(std::move(coords)) {}

  friend SimplexPoint make_point(std::vector<double>, FeasibilityTolerance);
  friend std::optional<SimplexPoint> try_make_point(std::vector<double>, FeasibilityTolerance);

  std::vector<double> coords_;
};

// Throws TooFewCoordinates, NegativeCoordinate (first offending index; NaN
// counts as negative) or SumOutOfTolerance.
SimplexPoint make_point(std::vector<double> raw, FeasibilityTolerance tol = {});

// Non-throwing form of make_point.
std::optional<SimplexPoint> try_make_point(std::vector<double> raw,
                                           FeasibilityTolerance tol = {});

// True iff make_point would accept `raw`.
bool is_feasible(std::span<const double> raw, FeasibilityTolerance tol = {});

// Identical bit patterns in every coordinate.
bool bitwise_equal(const SimplexPoint& a, const SimplexPoint& b) noexcept;

// sum_i (a_i - b_i)^2. Throws DimensionMismatch.
double squared_distance(const SimplexPoint& a, const SimplexPoint& b);

// Flat Dirichlet draw: normalized independent standard exponentials.
SimplexPoint random_simplex_point(std::size_t dim, Rng& rng);

// (1/m, ..., 1/m)
SimplexPoint uniform_point(std::size_t dim);

}  // namespace gcdvss
