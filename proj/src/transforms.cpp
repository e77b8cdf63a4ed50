#include "gcdvss/transforms.hpp"

#include <algorithm>

#include "gcdvss/errors.hpp"

namespace gcdvss::transforms {

Objective with_slack(RealFunction f, std::size_t m, std::string name) {
  if (m < 1) throw InvalidParameters("with_slack: need at least one original variable");
  return Objective{[f = std::move(f), m](std::span<const double> p) { return f(p.first(m)); },
                   m + 1, std::move(name)};
}

LinearConstraint::LinearConstraint(std::vector<double> coefficients, double rhs)
    : a_(std::move(coefficients)), k_(rhs) {
  if (a_.empty()) throw InvalidParameters("linear constraint: no coefficients");
  for (double a : a_)
    if (!(a > 0.0)) throw InvalidParameters("linear constraint: coefficients must be positive");
  if (!(k_ > 0.0)) throw InvalidParameters("linear constraint: rhs must be positive");
}

std::vector<double> LinearMap::forward(std::span<const double> x) const {
  if (x.size() != c_.dim()) throw DimensionMismatch(c_.dim(), x.size());
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = c_.coefficients()[i] * x[i] / c_.rhs();
  return y;
}

std::vector<double> LinearMap::inverse(std::span<const double> y) const {
  if (y.size() != c_.dim()) throw DimensionMismatch(c_.dim(), y.size());
  std::vector<double> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = c_.rhs() * y[i] / c_.coefficients()[i];
  return x;
}

LinearMap linear_to_simplex(const LinearConstraint& c) { return LinearMap{c}; }

namespace {

RealFunction compose_inverse(RealFunction f, const LinearConstraint& c) {
  return [f = std::move(f), map = LinearMap{c}](std::span<const double> y) {
    const std::vector<double> x = map.inverse(y);
    return f(x);
  };
}

}  // namespace

Objective wrap_linear_objective(RealFunction f, const LinearConstraint& c, std::string name) {
  return Objective{compose_inverse(std::move(f), c), c.dim(), std::move(name)};
}

Objective wrap_linear_inequality_objective(RealFunction f, const LinearConstraint& c,
                                           std::string name) {
  return with_slack(compose_inverse(std::move(f), c), c.dim(), std::move(name));
}

void HypercubeDomain::validate() const {
  if (!(upper > lower)) throw InvalidParameters("hypercube: upper must exceed lower");
  if (dim < 1) throw InvalidParameters("hypercube: dimension must be at least 1");
}

HypercubeEmbedding::HypercubeEmbedding(HypercubeDomain dom)
    : dom_(dom), scale_(static_cast<double>(dom.dim) * (dom.upper - dom.lower)) {
  dom_.validate();
}

SimplexPoint HypercubeEmbedding::embed(std::span<const double> x) const {
  if (x.size() != dom_.dim) throw DimensionMismatch(dom_.dim, x.size());
  std::vector<double> y(dom_.dim + 1);
  double used = 0.0;
  for (std::size_t i = 0; i < dom_.dim; ++i) {
    y[i] = to_simplex(x[i]);
    used += y[i];
  }
  // All-upper-corner points can overshoot 1 by an ulp.
  y[dom_.dim] = std::max(0.0, 1.0 - used);
  return make_point(std::move(y));
}

std::vector<double> HypercubeEmbedding::recover(std::span<const double> y) const {
  if (y.size() != dom_.dim + 1) throw DimensionMismatch(dom_.dim + 1, y.size());
  std::vector<double> x(dom_.dim);
  for (std::size_t i = 0; i < dom_.dim; ++i) x[i] = from_simplex(y[i]);
  return x;
}

Objective HypercubeEmbedding::wrap(RealFunction f, std::string name) const {
  return Objective{[f = std::move(f), self = *this](std::span<const double> y) {
                     const std::vector<double> x = self.recover(y);
                     return f(x);
                   },
                   dom_.dim + 1, std::move(name)};
}

HypercubeEmbedding hypercube_embed(const HypercubeDomain& dom) { return HypercubeEmbedding{dom}; }

Objective negate(const Objective& f) {
  return Objective{[g = f.function()](std::span<const double> p) { return -g(p); }, f.dim(),
                   f.name().empty() ? std::string{} : "-" + f.name()};
}

}  // namespace gcdvss::transforms
