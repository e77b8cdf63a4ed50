#include "gcdvss/objective.hpp"

#include "gcdvss/errors.hpp"

namespace gcdvss {

Objective::Objective(RealFunction fn, std::optional<std::size_t> dim, std::string name)
    : fn_(std::move(fn)),
      dim_(dim),
      name_(std::move(name)),
      counter_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  if (!fn_) throw InvalidParameters("objective function is empty");
}

double Objective::operator()(const SimplexPoint& p) const { return evaluate_raw(p.coords()); }

double Objective::evaluate_raw(std::span<const double> x) const {
  if (dim_ && x.size() != *dim_) throw DimensionMismatch(*dim_, x.size());
  counter_->fetch_add(1, std::memory_order_relaxed);
  return fn_(x);
}

Objective Objective::with_fresh_counter() const { return Objective{fn_, dim_, name_}; }

}  // namespace gcdvss
