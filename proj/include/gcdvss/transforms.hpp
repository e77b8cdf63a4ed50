#pragma once

// Reductions of related problems to minimization over the unit simplex:
//  - slack coordinate for sum(p) <= 1
//  - scaling y_i = a_i x_i / K for sum(a_i x_i) = K with a_i, K > 0
//  - box [l, u]^d embedded as the first d coordinates of a (d+1)-simplex
//  - negation, to minimize what should be maximized

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gcdvss/objective.hpp"
#include "gcdvss/simplex.hpp"

namespace gcdvss::transforms {

// Objective on the (m+1)-coordinate simplex that ignores the last
// coordinate and evaluates f on the first m.
Objective with_slack(RealFunction f, std::size_t m, std::string name = {});

class LinearConstraint {
public:
  // Throws InvalidParameters unless every coefficient and the rhs are > 0.
  LinearConstraint(std::vector<double> coefficients, double rhs);

  std::span<const double> coefficients() const noexcept { return a_; }
  double rhs() const noexcept { return k_; }
  std::size_t dim() const noexcept { return a_.size(); }

private:
  std::vector<double> a_;
  double k_;
};

// x -> y = a x / K and back, coordinate-wise.
class LinearMap {
public:
  explicit LinearMap(LinearConstraint c) : c_(std::move(c)) {}

  std::vector<double> forward(std::span<const double> x) const;
  std::vector<double> inverse(std::span<const double> y) const;
  const LinearConstraint& constraint() const noexcept { return c_; }

private:
  LinearConstraint c_;
};

LinearMap linear_to_simplex(const LinearConstraint& c);

// h(y) = f(K y_1 / a_1, ..., K y_m / a_m) on the m-coordinate simplex
// (equality constraint sum a_i x_i = K).
Objective wrap_linear_objective(RealFunction f, const LinearConstraint& c, std::string name = {});

// Inequality form sum a_i x_i <= K: scale as above, then add a slack
// coordinate. Result lives on the (m+1)-coordinate simplex.
Objective wrap_linear_inequality_objective(RealFunction f, const LinearConstraint& c,
                                           std::string name = {});

struct HypercubeDomain {
  double lower;
  double upper;
  std::size_t dim;

  void validate() const;  // upper > lower, dim >= 1
};

/// Carries [l, u]^d onto the (d+1)-coordinate simplex via
/// g(x) = (x - l) / (d (u - l)), with the last coordinate taking up the slack.
/// The wrapped objective applies g^-1 on the whole simplex, including points
/// whose first d coordinates exceed 1/d, which map outside the box.
class HypercubeEmbedding {
public:
  explicit HypercubeEmbedding(HypercubeDomain dom);

  double to_simplex(double x) const noexcept { return (x - dom_.lower) / scale_; }
  double from_simplex(double y) const noexcept { return dom_.lower + scale_ * y; }

  // Image of a box point: d mapped coordinates plus the slack.
  SimplexPoint embed(std::span<const double> x) const;
  // First d coordinates mapped back; the slack is dropped.
  std::vector<double> recover(std::span<const double> y) const;

  Objective wrap(RealFunction f, std::string name = {}) const;

  const HypercubeDomain& domain() const noexcept { return dom_; }

private:
  HypercubeDomain dom_;
  double scale_;  // d (u - l)
};

HypercubeEmbedding hypercube_embed(const HypercubeDomain& dom);

// p -> -f(p), with its own counter.
Objective negate(const Objective& f);

}  // namespace gcdvss::transforms
