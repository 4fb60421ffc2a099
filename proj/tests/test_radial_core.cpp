#include <doctest.h>

#include <cmath>
#include <numbers>

#include "coulab/error.hpp"
#include "coulab/json_io.hpp"
#include "coulab/quadrature.hpp"
#include "coulab/radial_profile.hpp"
#include "test_helpers.hpp"

using namespace coulab;
using testing::rel;

TEST_CASE("tent values, derivative and support") {
  const auto t = testing::tent();
  CHECK(t(2.0) == doctest::Approx(1.0));
  CHECK(t(1.5) == doctest::Approx(0.5));
  CHECK(t(0.5) == 0.0);
  CHECK(t(3.5) == 0.0);
  CHECK(t.derivative(1.5) == doctest::Approx(1.0));
  CHECK(t.derivative(2.5) == doctest::Approx(-1.0));
  CHECK(t.support_begin() == 1.0);
  CHECK(t.support_end() == 3.0);
  CHECK(t.kinks() == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("tent constructor rejects bad parameters") {
  CHECK_THROWS_AS(RadialProfile::tent(0.0, 2.0, 1.0), InputError);
  CHECK_THROWS_AS(RadialProfile::tent(1.0, 1.0, 1.0), InputError);
  CHECK_THROWS_AS(RadialProfile::tent(1.0, 2.0, -1.0), InputError);
  CHECK_THROWS_AS(RadialProfile::tent(NAN, 2.0, 1.0), InputError);
}

TEST_CASE("gaussian mixture and piecewise-linear validation") {
  CHECK_THROWS_AS(RadialProfile::gaussian_mixture({}, {}), InputError);
  CHECK_THROWS_AS(RadialProfile::gaussian_mixture({1.0}, {0.0}), InputError);
  CHECK_THROWS_AS(RadialProfile::gaussian_mixture({1.0, 2.0}, {1.0}), InputError);
  CHECK_THROWS_AS(RadialProfile::piecewise_linear({0.0, 1.0}, {1.0, 0.5}), InputError);
  CHECK_THROWS_AS(RadialProfile::piecewise_linear({1.0, 0.5}, {1.0, 0.0}), InputError);
  CHECK_THROWS_AS(RadialProfile::piecewise_linear({-1.0, 0.5}, {1.0, 0.0}), InputError);
  const auto pl = RadialProfile::piecewise_linear({1.0, 2.0}, {2.0, 0.0});
  CHECK(pl(0.5) == 2.0);
  CHECK(pl(1.5) == doctest::Approx(1.0));
  CHECK(pl(2.5) == 0.0);
}

TEST_CASE("increment matches the plain difference away from cancellation") {
  for (const auto& phi : {testing::gauss(), testing::tent(), testing::mix()}) {
    for (double r : {0.3, 1.2, 1.9, 2.7}) {
      for (double h : {0.5, 0.05, 1e-3}) {
        const double direct = phi(r + h) - phi(r);
        CHECK(phi.increment(r, h) == doctest::Approx(direct).epsilon(1e-9).scale(1.0));
      }
    }
  }
  // Tiny steps keep full relative accuracy.
  const auto g = testing::gauss();
  const double h = 1e-14;
  CHECK(rel(g.increment(1.0, h), g.derivative(1.0) * h) < 1e-12);
}

TEST_CASE("scaled and dilated profiles") {
  const auto t = testing::tent();
  CHECK(t.scaled(3.0)(2.0) == doctest::Approx(3.0));
  CHECK(t.dilated(2.0)(1.0) == doctest::Approx(1.0));
  const auto g = testing::gauss().dilated(2.0);
  CHECK(g(0.5) == doctest::Approx(std::exp(-0.5)));
  CHECK(t.scaled(-1.0)(2.0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(t.dilated(0.0), InputError);
}

TEST_CASE("ball and zero profiles") {
  const auto b = RadialProfile::ball();
  CHECK(b(0.5) == 1.0);
  CHECK(b(1.0) == doctest::Approx(0.5));
  CHECK(b(1.1) == 0.0);
  CHECK(RadialProfile::zero().is_zero());
  CHECK_FALSE(testing::gauss().is_zero());
}

TEST_CASE("evaluate rejects negative radii") {
  CHECK_THROWS_AS(evaluate(testing::gauss(), -1.0), InputError);
  CHECK(evaluate(testing::gauss(), 0.0) == 1.0);
}

TEST_CASE("adaptive quadrature on smooth, singular and infinite ranges") {
  const QuadratureSpec q{};
  auto r1 = radial_integral([](double x) { return std::exp(-x * x); }, 0.0, kInf, q);
  CHECK(rel(r1.value, std::sqrt(std::numbers::pi) / 2.0) < 1e-12);
  CHECK(r1.converged);
  IntegralOptions opts;
  opts.lo_singularity = -0.5;
  auto r2 = radial_integral([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, q, opts);
  CHECK(rel(r2.value, 2.0) < 1e-8);
  auto r3 = radial_integral([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, q, {{0.3}, 0.0});
  CHECK(rel(r3.value, 0.29) < 1e-12);
}

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  for (int n : {4, 12, 24}) {
    const auto& rule = gauss_legendre(n);
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * std::pow(rule.nodes[k], 2 * n - 2);
    CHECK(sum == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
}

TEST_CASE("profile JSON round trip and loader") {
  const auto t = testing::tent();
  const auto j = profile_to_json(t);
  const auto back = profile_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back(1.7) == t(1.7));
  CHECK(load_profile("builtin:gaussian")(1.0) == doctest::Approx(std::exp(-0.5)));
  CHECK(load_profile(R"({"type":"gaussian_mixture","coeffs":[2],"widths":[1]})")(0.0) == 2.0);
  CHECK_THROWS_AS(load_profile("{not json"), InputError);
  CHECK_THROWS_AS(load_profile(R"({"type":"spline"})"), InputError);
  CHECK_THROWS_AS(load_profile(R"({"type":"tent","epsilon":1,"R":2})"), InputError);
  CHECK_THROWS_AS(load_profile("builtin:nothing"), InputError);
  CHECK_THROWS_AS(load_profile("/nonexistent/profile.json"), InputError);
}
