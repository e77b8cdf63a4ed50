#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "gcdvss/simplex.hpp"

namespace gcdvss {

// A plain real function of a coordinate vector. Used for functions that
// live outside the simplex (box domains, x-space of a linear constraint)
// before a transform wraps them into an Objective.
using RealFunction = std::function<double(std::span<const double>)>;

/// Real-valued function on simplex points with a call counter.
///
/// The wrapped function must be deterministic and safe to call from several
/// threads at once. Copies share the same counter; use with_fresh_counter()
/// to get an independently counted handle to the same function.
class Objective {
public:
  // `dim` pins the expected number of coordinates; evaluate throws
  // DimensionMismatch on anything else. Empty means any dimension.
  explicit Objective(RealFunction fn, std::optional<std::size_t> dim = std::nullopt,
                     std::string name = {});

  double operator()(const SimplexPoint& p) const;

  // Evaluates raw coordinates without the feasibility check. Still counted.
  double evaluate_raw(std::span<const double> x) const;

  std::uint64_t evaluations() const noexcept { return counter_->load(std::memory_order_relaxed); }
  void reset_counter() noexcept { counter_->store(0, std::memory_order_relaxed); }

  Objective with_fresh_counter() const;

  std::optional<std::size_t> dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  const RealFunction& function() const noexcept { return fn_; }

private:
  RealFunction fn_;
  std::optional<std::size_t> dim_;
  std::string name_;
  std::shared_ptr<std::atomic<std::uint64_t>> counter_;
};

}  // namespace gcdvss
