#include <doctest.h>

#include <cmath>

#include "coulab/counterexample.hpp"
#include "coulab/error.hpp"
#include "coulab/functionals.hpp"
#include "test_helpers.hpp"

using namespace coulab;
using testing::quad;
using testing::rel;

TEST_CASE("sweep at s = 1 reproduces the divergence rate") {
  const auto sweep = run_sweep(1.0, 2.4, kDefaultEpsilons, quad);
  REQUIRE(sweep.records.size() == 5);
  CHECK_FALSE(sweep.exploratory);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& r = sweep.records[i];
    CHECK(r.epsilon == kDefaultEpsilons[i]);
    CHECK(r.converged);
    CHECK(r.R > r.S);
    CHECK(check_lemma_bound(r, 1.0) == doctest::Approx(r.lemma_ratio));
    if (i > 0) CHECK(r.ratio > sweep.records[i - 1].ratio);
  }
  const auto fit = fit_slope(sweep.records, 2.4, 1.0);
  CHECK(std::abs(fit.measured - fit.predicted) < 0.15);
  CHECK(fit.predicted == doctest::Approx(2.4 - 18.0 / 7.0));
}

TEST_CASE("sweep records match direct functionals") {
  const auto sweep = run_sweep(0.75, 2.6, {0.2, 0.1}, quad);
  const auto& r = sweep.records[1];
  const auto t = RadialProfile::tent(r.epsilon, r.R, r.S);
  CHECK(rel(r.hs_norm_sq, std::pow(sobolev_spectral(t, 0.75, quad).value, 2.0)) < 1e-12);
  CHECK(rel(r.coulomb, coulomb_newton(t, quad).value) < 1e-12);
  CHECK(rel(r.lp_norm_p, std::pow(lp_norm(t, 2.6, quad).value, 2.6)) < 1e-12);
  CHECK(rel(tent_closed_forms(r.epsilon, r.R, r.S, 2.0).l2_sq, std::pow(lp_norm(t, 2.0, quad).value, 2.0)) < 1e-12);
}

TEST_CASE("sweep is independent of the thread count") {
  const auto a = run_sweep(1.0, 2.8, kDefaultEpsilons, quad, 1);
  const auto b = run_sweep(1.0, 2.8, kDefaultEpsilons, quad, 3);
  CHECK(sweep_csv(a.records) == sweep_csv(b.records));
}

TEST_CASE("sweep preconditions") {
  CHECK_THROWS_AS(run_sweep(1.0, 2.4, {0.1, 0.2}, quad), InputError);
  CHECK_THROWS_AS(run_sweep(1.0, 2.4, {1.5}, quad), InputError);
  CHECK_THROWS_AS(run_sweep(0.4, 2.4, {0.1}, quad), InputError);
  CHECK_THROWS_AS(run_sweep(1.0, 0.5, {0.1}, quad), InputError);
  CHECK(run_sweep(1.2, 2.6, {0.1}, quad).exploratory);
  const auto one = run_sweep(1.0, 2.4, {0.1}, quad);
  CHECK_THROWS_AS(fit_slope(one.records, 2.4, 1.0), InputError);
}

TEST_CASE("sweep csv layout") {
  const auto sweep = run_sweep(1.0, 2.4, {0.1}, quad);
  const std::string csv = sweep_csv(sweep.records);
  CHECK(csv.rfind("epsilon,R,S,hs_norm_sq,coulomb,lp_norm_p,energy_norm,ratio,lemma_ratio\n", 0) == 0);
  CHECK(csv.find("0.10000000000000001,") != std::string::npos);
}
