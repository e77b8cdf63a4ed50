#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gcdvss {

// Root of every error this library throws. Callers that only need a
// diagnostic can catch this; the subclasses carry the offending data.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class TooFewCoordinates : public Error {
public:
  explicit TooFewCoordinates(std::size_t count);
  std::size_t count() const noexcept { return count_; }

private:
  std::size_t count_;
};

class NegativeCoordinate : public Error {
public:
  NegativeCoordinate(std::size_t index, double value);
  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

private:
  std::size_t index_;
  double value_;
};

class SumOutOfTolerance : public Error {
public:
  explicit SumOutOfTolerance(double actual_sum);
  double actual_sum() const noexcept { return sum_; }

private:
  double sum_;
};

class DimensionMismatch : public Error {
public:
  DimensionMismatch(std::size_t expected, std::size_t actual);
  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

private:
  std::size_t expected_;
  std::size_t actual_;
};

// Raised when the objective returns NaN or an infinity. `proposal` is the
// index of the candidate move within the iteration's 2m proposals; it is
// empty when the incumbent point itself produced the bad value.
class NonFiniteObjective : public Error {
public:
  NonFiniteObjective(std::optional<std::size_t> proposal, double value);
  std::optional<std::size_t> proposal() const noexcept { return proposal_; }
  double value() const noexcept { return value_; }

private:
  std::optional<std::size_t> proposal_;
  double value_;
};

class AllCoordinatesInsignificant : public Error {
public:
  explicit AllCoordinatesInsignificant(double lambda);
};

class InvalidParameters : public Error {
public:
  using Error::Error;
};

class UnknownBenchmark : public Error {
public:
  explicit UnknownBenchmark(const std::string& name);
};

class UnsupportedDimension : public Error {
public:
  UnsupportedDimension(const std::string& name, long dim);
};

class IoError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace gcdvss
