#include <doctest.h>

#include <cmath>
#include <random>

#include "coulab/error.hpp"
#include "coulab/nelder_mead.hpp"
#include "coulab/optimize.hpp"
#include "oracle_values.hpp"
#include "test_helpers.hpp"

using namespace coulab;
using testing::quad;
using testing::rel;

TEST_CASE("quotient of the gaussian") {
  CHECK(rel(quotient_J(testing::gauss(), 4.0, 1.0, quad).value, oracle::gauss_J_s1_2p4) < 1e-12);
}

TEST_CASE("quotient invariances") {
  for (const auto& phi : {testing::gauss(), testing::tent(), testing::mix()}) {
    const double J = quotient_J(phi, 3.0, 0.75, quad).value;
    CHECK(rel(quotient_J(phi.scaled(5.0), 3.0, 0.75, quad).value, J) < 1e-9);
    CHECK(rel(quotient_J(phi.dilated(2.0), 3.0, 0.75, quad).value, J) < 1e-6);
  }
}

TEST_CASE("quotient preconditions") {
  CHECK_THROWS_AS(quotient_J(testing::gauss(), 18.0 / 7.0, 1.0, quad), InputError);
  CHECK_THROWS_AS(quotient_J(testing::gauss(), 7.0, 1.0, quad), InputError);
  CHECK_THROWS_AS(quotient_J(RadialProfile::zero(), 4.0, 1.0, quad), InputError);
}

TEST_CASE("lambda minimization") {
  const auto sym = lambda_minimize(1.0, 1.0, 1.0, 1.0);
  CHECK(sym.lambda_star == 1.0);
  CHECK(sym.min_value == 2.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double A = u(rng), B = u(rng), a = u(rng), b = u(rng);
    const auto m = lambda_minimize(A, B, a, b);
    const double l = m.lambda_star;
    CHECK(std::abs(a * A * std::pow(l, a) - b * B * std::pow(l, -b)) <= 1e-10 * m.min_value);
    CHECK(rel(m.min_value, A * std::pow(l, a) + B * std::pow(l, -b)) < 1e-14);
    CHECK(m.min_value <= A * std::pow(1.1 * l, a) + B * std::pow(1.1 * l, -b));
  }
  const auto flat = lambda_minimize(2.0, 1.0, 0.0, 1.0);
  CHECK(std::isinf(flat.lambda_star));
  CHECK(flat.min_value == 2.0);
  CHECK_THROWS_AS(lambda_minimize(1.0, 0.0, 1.0, 1.0), InputError);
  CHECK_THROWS_AS(lambda_minimize(1.0, 1.0, 1.0, 0.0), InputError);
}

TEST_CASE("nelder-mead finds the rosenbrock minimum") {
  const auto f = [](const std::vector<double>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions opts;
  opts.tol = 1e-14;
  opts.max_iters = 5000;
  const auto r = nelder_mead(f, {-1.2, 1.0}, opts);
  CHECK(r.converged);
  CHECK(std::abs(r.x[0] - 1.0) < 1e-4);
  CHECK(std::abs(r.x[1] - 1.0) < 1e-4);
}

TEST_CASE("best constant search beats the gaussian and is reproducible") {
  OptimizerConfig config;
  config.restarts = 3;
  const auto a = best_constant_search(1.0, 4.0, config, quad);
  const auto b = best_constant_search(1.0, 4.0, config, quad);
  CHECK(a.best_J >= a.gaussian_J);
  CHECK(rel(a.gaussian_J, oracle::gauss_J_s1_2p4) < 1e-12);
  CHECK(a.history.size() == 3);
  CHECK(a.to_json().dump() == b.to_json().dump());
  config.threads = 2;
  CHECK(best_constant_search(1.0, 4.0, config, quad).to_json().dump() == a.to_json().dump());
}

TEST_CASE("best constant search preconditions") {
  OptimizerConfig config;
  CHECK_THROWS_AS(best_constant_search(1.0, 6.0, config, quad), InputError);
  config.family_size = 0;
  CHECK_THROWS_AS(best_constant_search(1.0, 4.0, config, quad), InputError);
}

TEST_CASE("ruiz constant estimate over the fixtures") {
  const double c = ruiz_constant_estimate({testing::gauss(), testing::tent()}, 1.0, quad);
  CHECK(c > 0.0);
  CHECK(std::isfinite(c));
}
