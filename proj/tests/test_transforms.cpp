#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "gcdvss/benchfns.hpp"
#include "gcdvss/errors.hpp"
#include "gcdvss/transforms.hpp"

using namespace gcdvss;
using namespace gcdvss::transforms;

namespace {

double rel_err(double got, double want) {
  const double scale = std::max(1.0, std::fabs(want));
  return std::fabs(got - want) / scale;
}

}  // namespace

TEST_CASE("with_slack ignores the slack coordinate") {
  auto f = with_slack([](std::span<const double> p) { return p[0] * p[0]; }, 1);
  CHECK(f.dim() == 2);
  CHECK(f(make_point({0.4, 0.6})) == doctest::Approx(0.16));
  CHECK_THROWS_AS(make_point({0.4, 0.1}), SumOutOfTolerance);
  CHECK(f(make_point({0.0, 1.0})) == 0.0);
  for (double t : {0.1, 0.5, 0.9}) CHECK(f(make_point({t, 1.0 - t})) > 0.0);

  auto g = with_slack([](std::span<const double> p) { return p[0] + 2 * p[1]; }, 2);
  CHECK(g(make_point({0.2, 0.3, 0.5})) == g.evaluate_raw(std::vector<double>{0.2, 0.3, 0.1}));
}

TEST_CASE("linear_to_simplex examples") {
  auto map = linear_to_simplex(LinearConstraint({3, 2}, 6));
  CHECK(map.forward(std::vector<double>{2, 0}) == std::vector<double>{1, 0});
  auto x = map.inverse(std::vector<double>{0.5, 0.5});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(1.5));
  CHECK(3 * x[0] + 2 * x[1] == doctest::Approx(6.0));

  auto id = linear_to_simplex(LinearConstraint({1, 1, 1}, 1));
  std::vector<double> v = {0.2, 0.3, 0.5};
  CHECK(id.forward(v) == v);
  CHECK(id.inverse(v) == v);

  CHECK_THROWS_AS(LinearConstraint({1, 0}, 1), InvalidParameters);
  CHECK_THROWS_AS(LinearConstraint({1, -2}, 1), InvalidParameters);
  CHECK_THROWS_AS(LinearConstraint({1, 2}, 0), InvalidParameters);
  CHECK_THROWS_AS(map.forward(std::vector<double>{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("linear map round trip and feasibility on random points") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> coef(0.1, 10.0);
  Rng rng(18);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const std::size_t m = 2 + k % 8;
    std::vector<double> a(m);
    for (double& v : a) v = coef(gen);
    const double K = coef(gen);
    auto map = linear_to_simplex(LinearConstraint(a, K));
    auto y = random_simplex_point(m, rng);
    auto x = map.inverse(y.coords());
    double lhs = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(x[i] >= 0.0);
      lhs += a[i] * x[i];
    }
    worst = std::max(worst, rel_err(lhs, K));
    auto back = map.forward(x);
    CHECK(is_feasible(back));
    for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, rel_err(back[i], y[i]));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("wrap_linear_objective") {
  LinearConstraint c({3, 2}, 6);
  auto h = wrap_linear_objective([](std::span<const double>) { return 4.0; }, c);
  CHECK(h(make_point({0.3, 0.7})) == 4.0);

  auto lin = wrap_linear_objective(
      [](std::span<const double> x) { return 3 * x[0] + 2 * x[1]; }, c);
  Rng rng(2);
  for (int k = 0; k < 1000; ++k) CHECK(lin(random_simplex_point(2, rng)) == doctest::Approx(6.0));

  // Inequality form of the x-y problem: optimum value 2 at (2/7, 2/7).
  auto wrapped = wrap_linear_inequality_objective(
      [](std::span<const double> x) { return -bench::sin_nonconvex_xy(x[0], x[1]); }, c);
  CHECK(wrapped.dim() == 3);
  auto y = linear_to_simplex(c).forward(std::vector<double>{2.0 / 7.0, 2.0 / 7.0});
  auto star = make_point({y[0], y[1], 1.0 - y[0] - y[1]});
  CHECK(wrapped(star) == doctest::Approx(-2.0).epsilon(1e-12));

  // The registry entry is the same function.
  auto spec = bench::registry_lookup("sin_nonconvex");
  Rng r2(3);
  for (int k = 0; k < 10000; ++k) {
    auto p = random_simplex_point(3, r2);
    CHECK(rel_err(spec.objective(p), wrapped(p)) <= 1e-12);
  }
}

TEST_CASE("hypercube embedding examples") {
  auto emb = hypercube_embed({-5.0, 5.0, 5});
  CHECK(emb.to_simplex(0.0) == doctest::Approx(0.1));
  CHECK(emb.to_simplex(-5.0) == 0.0);
  CHECK(emb.to_simplex(5.0) == doctest::Approx(0.2));
  auto star = emb.embed(std::vector<double>(5, 0.0));
  for (std::size_t i = 0; i < 5; ++i) CHECK(star[i] == doctest::Approx(0.1));
  CHECK(star[5] == doctest::Approx(0.5));
  for (double x : {-5.0, -1.3, 0.0, 4.2, 5.0})
    CHECK(emb.from_simplex(emb.to_simplex(x)) == doctest::Approx(x).epsilon(1e-14));

  CHECK_THROWS_AS(hypercube_embed({1.0, 1.0, 2}), InvalidParameters);
  CHECK_THROWS_AS(hypercube_embed({0.0, 1.0, 0}), InvalidParameters);

  // Outside [0, 1/d] the inverse map simply extends.
  auto big = make_point({0.9, 0.0, 0.0, 0.0, 0.0, 0.1});
  CHECK(emb.recover(big.coords())[0] == doctest::Approx(40.0));
}

TEST_CASE("hypercube embedding: pointwise equality and round trip on random cube points") {
  struct Case {
    HypercubeDomain dom;
    double (*f)(std::span<const double>);
  };
  std::mt19937_64 gen(99);
  for (const Case& c : {Case{bench::ackley_domain(5), bench::ackley},
                        Case{bench::griewank_domain(7), bench::griewank},
                        Case{bench::rastrigin_domain(3), bench::rastrigin},
                        Case{{-2.0, 3.5, 1}, bench::rastrigin}}) {
    auto emb = hypercube_embed(c.dom);
    auto wrapped = emb.wrap(c.f);
    std::uniform_real_distribution<double> u(c.dom.lower, c.dom.upper);
    double worst_val = 0.0, worst_x = 0.0;
    for (int k = 0; k < 10000; ++k) {
      std::vector<double> x(c.dom.dim);
      for (double& v : x) v = u(gen);
      auto y = emb.embed(x);
      CHECK(is_feasible(y.coords()));
      worst_val = std::max(worst_val, rel_err(wrapped(y), c.f(x)));
      auto back = emb.recover(y.coords());
      for (std::size_t i = 0; i < x.size(); ++i)
        worst_x = std::max(worst_x, std::fabs(back[i] - x[i]) /
                                        std::max(1.0, std::fabs(x[i])));
    }
    CHECK(worst_val <= 1e-12);
    CHECK(worst_x <= 1e-12);
  }
}

TEST_CASE("negate") {
  Objective three([](std::span<const double>) { return 3.0; });
  auto n = negate(three);
  auto p = make_point({0.5, 0.5});
  CHECK(n(p) == -3.0);
  CHECK(negate(n)(p) == 3.0);

  Rng rng(6);
  Objective f([](std::span<const double> x) { return std::sin(7 * x[0]) * x[1]; }, 2, "f");
  auto nn = negate(negate(f));
  for (int k = 0; k < 1000; ++k) {
    auto q = random_simplex_point(2, rng);
    CHECK(nn(q) == f(q));
  }
  CHECK(negate(f).name() == "-f");

  Objective easom_max([](std::span<const double> x) { return -bench::modified_easom(x); }, 3);
  auto third = make_point({1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(easom_max(third) == doctest::Approx(1.0));
  CHECK(negate(easom_max)(third) == doctest::Approx(-1.0));
}

TEST_CASE("negate keeps its own counter") {
  Objective f([](std::span<const double> x) { return x[0]; });
  auto n = negate(f);
  auto p = make_point({0.5, 0.5});
  n(p);
  n(p);
  CHECK(n.evaluations() == 2);
  CHECK(f.evaluations() == 0);
}
