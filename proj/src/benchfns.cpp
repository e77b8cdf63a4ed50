#include "gcdvss/benchfns.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "gcdvss/errors.hpp"
#include "gcdvss/kernels.hpp"

namespace gcdvss::bench {
namespace {

using std::numbers::e;
using std::numbers::pi;

// Isotropic bivariate normal density with variance `var` per axis.
double normal2(double x0, double x1, double m0, double m1, double var) {
  const double d2 = (x0 - m0) * (x0 - m0) + (x1 - m1) * (x1 - m1);
  return std::exp(-d2 / (2.0 * var)) / (2.0 * pi * var);
}

double ackley_weighted(std::span<const double> x, double w) {
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(w * sq)) - std::exp(w * cs) + e + 20.0;
}

template <class F>
double on_box(std::span<const double> y, transforms::HypercubeDomain dom, F f) {
  return f(transforms::HypercubeEmbedding{dom}.recover(y));
}

void require_dim(std::span<const double> p, std::size_t want) {
  if (p.size() != want) throw DimensionMismatch(want, p.size());
}

void require_box(std::span<const double> y) {
  if (y.size() < 2) throw DimensionMismatch(2, y.size());
}

}  // namespace

double gaussian_max(std::span<const double> p) {
  require_dim(p, 2);
  const double a = 8.0 * normal2(p[0], p[1], 0.25, 0.75, 0.1);
  const double b = 5.0 * normal2(p[0], p[1], 0.8, 0.2, 0.1);
  return -std::max(a, b);
}

double modified_easom(std::span<const double> p) {
  require_dim(p, 3);
  double prod = 1.0;
  double dev = 0.0;
  for (double v : p) {
    prod *= std::cos(6.0 * pi * v);
    const double t = 3.0 * pi * v - pi;
    dev += t * t;
  }
  return -(prod * std::exp(-dev));
}

double sin_nonconvex_xy(double x, double y) {
  return std::sin(7.0 * pi * x / 4.0) + std::sin(7.0 * pi * y / 4.0) - 2.0 * (x - y) * (x - y);
}

double sin_nonconvex(std::span<const double> y) {
  require_dim(y, 3);
  // x = K y_1 / a_1, y = K y_2 / a_2 with a = (3, 2), K = 6.
  return -sin_nonconvex_xy(6.0 * y[0] / 3.0, 6.0 * y[1] / 2.0);
}

double power4(std::span<const double> p) { return -kernels::weighted_fourth_power_sum(p); }

double ackley(std::span<const double> x) {
  return ackley_weighted(x, 1.0 / static_cast<double>(x.size()));
}

double ackley_half_weight(std::span<const double> x) { return ackley_weighted(x, 0.5); }

double griewank(std::span<const double> x) {
  double sq = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sq += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sq / 4000.0 - prod + 1.0;
}

double rastrigin(std::span<const double> x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v);
  return s;
}

transforms::HypercubeDomain ackley_domain(std::size_t d) { return {-5.0, 5.0, d}; }
transforms::HypercubeDomain griewank_domain(std::size_t d) { return {-500.0, 500.0, d}; }
transforms::HypercubeDomain rastrigin_domain(std::size_t d) { return {-5.0, 5.0, d}; }

transforms::LinearConstraint sin_nonconvex_constraint() { return {{3.0, 2.0}, 6.0}; }

double ackley_simplex(std::span<const double> y) {
  require_box(y);
  return on_box(y, ackley_domain(y.size() - 1), [](const std::vector<double>& x) {
    return ackley(x);
  });
}

double griewank_simplex(std::span<const double> y) {
  require_box(y);
  return on_box(y, griewank_domain(y.size() - 1), [](const std::vector<double>& x) {
    return griewank(x);
  });
}

double rastrigin_simplex(std::span<const double> y) {
  require_box(y);
  return on_box(y, rastrigin_domain(y.size() - 1), [](const std::vector<double>& x) {
    return rastrigin(x);
  });
}

Objective convex_quadratic(std::vector<double> center) {
  const std::size_t m = center.size();
  return Objective{[c = std::move(center)](std::span<const double> p) {
                     return kernels::squared_distance(p, c);
                   },
                   m, "quadratic"};
}

bool BenchmarkSpec::success(double value) const noexcept {
  return std::abs(value - known_optimum_value) < success_threshold;
}

namespace {

constexpr std::array<FamilyInfo, 7> kFamilies{{
    {"gaussian_max", "negated max of two scaled bivariate normals on the 1-simplex", 2, 2, true},
    {"easom", "negated modified Easom function on the 2-simplex", 3, 3, true},
    {"sin_nonconvex", "negated sin(7 pi x/4) + sin(7 pi y/4) - 2(x-y)^2, 3x + 2y <= 6", 2, 2,
     true},
    {"power4", "negated sum i p_i^4 on the (n-1)-simplex", 5, 2, false},
    {"ackley", "Ackley on [-5,5]^d embedded in the d-simplex", 5, 1, false},
    {"griewank", "Griewank on [-500,500]^d embedded in the d-simplex", 5, 1, false},
    {"rastrigin", "Rastrigin on [-5,5]^d embedded in the d-simplex", 5, 1, false},
}};

std::size_t checked_dim(const FamilyInfo& f, long dim) {
  if (dim == 0) return f.default_dim;
  if (dim < 0 || static_cast<std::size_t>(dim) < f.min_dim ||
      (f.fixed_dim && static_cast<std::size_t>(dim) != f.default_dim))
    throw UnsupportedDimension(std::string(f.name), dim);
  return static_cast<std::size_t>(dim);
}

BenchmarkSpec box_family(std::string name, std::size_t d, transforms::HypercubeDomain dom,
                         RealFunction simplex_form) {
  const transforms::HypercubeEmbedding emb{dom};
  SimplexPoint opt = emb.embed(std::vector<double>(d, 0.0));
  return BenchmarkSpec{name, d, d + 1, Objective{std::move(simplex_form), d + 1, name}, 0.0,
                       std::move(opt)};
}

}  // namespace

std::span<const FamilyInfo> families() noexcept { return kFamilies; }

BenchmarkSpec registry_lookup(std::string_view name, long dim) {
  const FamilyInfo* family = nullptr;
  for (const FamilyInfo& f : kFamilies)
    if (f.name == name) family = &f;
  if (!family) throw UnknownBenchmark(std::string(name));
  const std::size_t d = checked_dim(*family, dim);
  const std::string id{name};

  if (name == "gaussian_max")
    return {id, 2, 2, Objective{gaussian_max, 2, id}, -8.0 / (2.0 * pi * 0.1),
            make_point({0.25, 0.75})};
  if (name == "easom")
    return {id, 3, 3, Objective{modified_easom, 3, id}, -1.0,
            make_point({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0})};
  if (name == "sin_nonconvex") {
    const transforms::LinearMap map{sin_nonconvex_constraint()};
    std::vector<double> y = map.forward(std::vector<double>{2.0 / 7.0, 2.0 / 7.0});
    y.push_back(1.0 - y[0] - y[1]);
    return {id, 2, 3, Objective{sin_nonconvex, 3, id}, -2.0, make_point(std::move(y))};
  }
  if (name == "power4") {
    std::vector<double> vertex(d, 0.0);
    vertex.back() = 1.0;
    return {id, d, d, Objective{power4, d, id}, -static_cast<double>(d),
            make_point(std::move(vertex))};
  }
  if (name == "ackley") return box_family(id, d, ackley_domain(d), ackley_simplex);
  if (name == "griewank") return box_family(id, d, griewank_domain(d), griewank_simplex);
  return box_family(id, d, rastrigin_domain(d), rastrigin_simplex);
}

}  // namespace gcdvss::bench
