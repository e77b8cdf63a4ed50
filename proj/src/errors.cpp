#include "gcdvss/errors.hpp"

#include <sstream>

namespace gcdvss {
namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

TooFewCoordinates::TooFewCoordinates(std::size_t count)
    : Error("a simplex point needs at least 2 coordinates, got " + std::to_string(count)),
      count_(count) {}

NegativeCoordinate::NegativeCoordinate(std::size_t index, double value)
    : Error("coordinate " + std::to_string(index) + " is negative (" + fmt_double(value) + ")"),
      index_(index),
      value_(value) {}

SumOutOfTolerance::SumOutOfTolerance(double actual_sum)
    : Error("coordinates sum to " + fmt_double(actual_sum) + ", not 1"), sum_(actual_sum) {}

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
            std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

NonFiniteObjective::NonFiniteObjective(std::optional<std::size_t> proposal, double value)
    : Error(proposal ? "objective returned " + fmt_double(value) + " at proposal " +
                           std::to_string(*proposal)
                     : "objective returned " + fmt_double(value) + " at the incumbent point"),
      proposal_(proposal),
      value_(value) {}

AllCoordinatesInsignificant::AllCoordinatesInsignificant(double lambda)
    : Error("every coordinate is at or below the sparsity threshold " + fmt_double(lambda)) {}

UnknownBenchmark::UnknownBenchmark(const std::string& name)
    : Error("unknown benchmark '" + name + "'") {}

UnsupportedDimension::UnsupportedDimension(const std::string& name, long dim)
    : Error("benchmark '" + name + "' does not support dimension " + std::to_string(dim)) {}

}  // namespace gcdvss
