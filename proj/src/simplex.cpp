#include "gcdvss/simplex.hpp"

#include <cmath>
#include <cstring>

#include "gcdvss/errors.hpp"
#include "gcdvss/kernels.hpp"

namespace gcdvss {

FeasibilityTolerance::FeasibilityTolerance(double sum_tol) : sum_tol_(sum_tol) {
  if (!(sum_tol > 0.0)) throw InvalidParameters("feasibility tolerance must be positive");
}

namespace {

bool sum_ok(double s, FeasibilityTolerance tol) { return std::abs(s - 1.0) <= tol.sum_tol(); }

}  // namespace

bool is_feasible(std::span<const double> raw, FeasibilityTolerance tol) {
  if (raw.size() < 2) return false;
  // NaN slips past min() but poisons the sum.
  return kernels::min(raw) >= 0.0 && sum_ok(kernels::sum(raw), tol);
}

std::optional<SimplexPoint> try_make_point(std::vector<double> raw, FeasibilityTolerance tol) {
  if (!is_feasible(raw, tol)) return std::nullopt;
  return SimplexPoint{std::move(raw)};
}

SimplexPoint make_point(std::vector<double> raw, FeasibilityTolerance tol) {
  if (raw.size() < 2) throw TooFewCoordinates(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!(raw[i] >= 0.0)) throw NegativeCoordinate(i, raw[i]);
  const double s = kernels::sum(raw);
  if (!sum_ok(s, tol)) throw SumOutOfTolerance(s);
  return SimplexPoint{std::move(raw)};
}

bool bitwise_equal(const SimplexPoint& a, const SimplexPoint& b) noexcept {
  return a.dim() == b.dim() &&
         std::memcmp(a.coords().data(), b.coords().data(), a.dim() * sizeof(double)) == 0;
}

double squared_distance(const SimplexPoint& a, const SimplexPoint& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  return kernels::squared_distance(a.coords(), b.coords());
}

SimplexPoint random_simplex_point(std::size_t dim, Rng& rng) {
  if (dim < 2) throw TooFewCoordinates(dim);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> x(dim);
  double total = 0.0;
  do {
    for (double& v : x) v = expo(rng);
    total = kernels::sum(x);
  } while (!(total > 0.0));
  for (double& v : x) v /= total;
  return make_point(std::move(x));
}

SimplexPoint uniform_point(std::size_t dim) {
  if (dim < 2) throw TooFewCoordinates(dim);
  return make_point(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

}  // namespace gcdvss
