#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "coulab/coulab.h"
#include "oracle_values.hpp"

namespace {
double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(x), std::abs(y)); }
}  // namespace

TEST_CASE("c api: profiles and functionals") {
  clab_profile* g = nullptr;
  REQUIRE(clab_profile_load("builtin:gaussian", &g) == CLAB_OK);
  clab_value v{};
  CHECK(clab_lp_norm(g, 2.0, nullptr, &v) == CLAB_OK);
  CHECK(rel(v.value, oracle::gauss_l2) < 1e-12);
  CHECK(v.converged == 1);
  CHECK(clab_coulomb_newton(g, nullptr, &v) == CLAB_OK);
  CHECK(rel(v.value, oracle::gauss_coulomb) < 1e-12);
  clab_quad q;
  clab_quad_default(&q);
  CHECK(clab_sobolev_spectral(g, 0.5, &q, &v) == CLAB_OK);
  CHECK(rel(v.value, oracle::gauss_hhalf) < 1e-12);
  CHECK(clab_quotient_j(g, 4.0, 1.0, &q, &v) == CLAB_OK);
  CHECK(rel(v.value, oracle::gauss_J_s1_2p4) < 1e-12);
  double x = 0.0;
  CHECK(clab_profile_evaluate(g, 1.0, &x) == CLAB_OK);
  CHECK(x == doctest::Approx(std::exp(-0.5)));
  char* json = nullptr;
  CHECK(clab_profile_json(g, &json) == CLAB_OK);
  CHECK(std::string(json).find("gaussian_mixture") != std::string::npos);
  clab_free_string(json);
  clab_profile_free(g);
}

TEST_CASE("c api: error codes and messages") {
  clab_profile* p = nullptr;
  CHECK(clab_profile_load("{broken", &p) == CLAB_INVALID_INPUT);
  CHECK(p == nullptr);
  CHECK(std::strlen(clab_last_error()) > 0);
  CHECK(clab_profile_tent(1.0, 0.5, 1.0, &p) == CLAB_INVALID_INPUT);
  clab_value v{};
  CHECK(clab_lp_norm(nullptr, 2.0, nullptr, &v) == CLAB_INVALID_INPUT);
  REQUIRE(clab_profile_tent(1.0, 2.0, 1.0, &p) == CLAB_OK);
  CHECK(std::strlen(clab_last_error()) == 0);
  clab_quad bad{-1.0, 1e-14, 100};
  CHECK(clab_lp_norm(p, 2.0, &bad, &v) == CLAB_INVALID_INPUT);
  CHECK(clab_sobolev_gagliardo(p, 1.0, nullptr, &v) == CLAB_INVALID_INPUT);
  CHECK(clab_sobolev_gagliardo(p, 0.75, nullptr, &v) == CLAB_OK);
  clab_profile_free(p);
  clab_profile_free(nullptr);
}

TEST_CASE("c api: derived profiles") {
  const double c[] = {1.0, 0.6}, w[] = {0.4, 2.5};
  clab_profile* m = nullptr;
  REQUIRE(clab_profile_gaussian_mixture(c, w, 2, &m) == CLAB_OK);
  clab_value v{};
  CHECK(clab_coulomb_spectral(m, nullptr, &v) == CLAB_OK);
  CHECK(rel(v.value, oracle::mix_coulomb) < 1e-9);
  clab_profile* s = nullptr;
  REQUIRE(clab_profile_scaled(m, 2.0, &s) == CLAB_OK);
  clab_value vs{};
  CHECK(clab_coulomb_spectral(s, nullptr, &vs) == CLAB_OK);
  CHECK(rel(vs.value, 16.0 * v.value) < 1e-9);
  const double k[] = {0.0, 1.0, 2.0}, vals[] = {1.0, 1.0, 0.0};
  clab_profile* pl = nullptr;
  CHECK(clab_profile_piecewise_linear(k, vals, 3, &pl) == CLAB_OK);
  clab_profile* d = nullptr;
  CHECK(clab_profile_dilated(pl, 2.0, &d) == CLAB_OK);
  double x = 0.0;
  CHECK(clab_profile_evaluate(d, 0.75, &x) == CLAB_OK);
  CHECK(x == doctest::Approx(0.5));
  for (auto* p : {m, s, pl, d}) clab_profile_free(p);
}

TEST_CASE("c api: sweep") {
  const double eps[] = {0.2, 0.1, 0.05, 0.02, 0.01};
  clab_sweep* sw = nullptr;
  REQUIRE(clab_sweep_run(1.0, 2.4, eps, 5, nullptr, 2, &sw) == CLAB_OK);
  CHECK(clab_sweep_size(sw) == 5);
  clab_sweep_record r{};
  CHECK(clab_sweep_record_at(sw, 4, &r) == CLAB_OK);
  CHECK(r.epsilon == 0.01);
  CHECK(clab_sweep_record_at(sw, 5, &r) == CLAB_INVALID_INPUT);
  double measured = 0.0, predicted = 0.0;
  CHECK(clab_sweep_fit(sw, &measured, &predicted) == CLAB_OK);
  CHECK(std::abs(measured - predicted) < 0.15);
  char* csv = nullptr;
  CHECK(clab_sweep_csv(sw, &csv) == CLAB_OK);
  CHECK(std::string(csv).rfind("epsilon,", 0) == 0);
  clab_free_string(csv);
  clab_sweep_free(sw);

  clab_sweep* one = nullptr;
  REQUIRE(clab_sweep_run(1.0, 2.4, eps + 1, 1, nullptr, 1, &one) == CLAB_OK);
  CHECK(clab_sweep_fit(one, &measured, &predicted) == CLAB_INVALID_INPUT);
  clab_sweep_free(one);
}

TEST_CASE("c api: exponents, lambda and verify") {
  char* json = nullptr;
  char* table = nullptr;
  CHECK(clab_exponents("1", nullptr, nullptr, nullptr, nullptr, nullptr, &json, &table) == CLAB_OK);
  CHECK(std::string(json).find("18/7") != std::string::npos);
  clab_free_string(json);
  clab_free_string(table);
  CHECK(clab_exponents("2", nullptr, nullptr, nullptr, nullptr, nullptr, &json, nullptr) == CLAB_INVALID_INPUT);
  double l = 0.0, m = 0.0;
  CHECK(clab_lambda_minimize(1.0, 1.0, 1.0, 1.0, &l, &m) == CLAB_OK);
  CHECK(l == 1.0);
  CHECK(m == 2.0);
  CHECK(clab_verify("bogus", 1e-3, nullptr, nullptr, nullptr) == CLAB_INVALID_INPUT);
  CHECK(clab_verify("pitt", 1e-3, nullptr, &table, nullptr) == CLAB_OK);
  CHECK(std::string(table).find("FAIL") == std::string::npos);
  clab_free_string(table);
  char* csv = nullptr;
  CHECK(clab_figure1_csv(&csv) == CLAB_OK);
  clab_free_string(csv);
}

TEST_CASE("c api: best constant rejects the sobolev endpoint") {
  char* json = nullptr;
  clab_optimizer_config config;
  clab_optimizer_default(&config);
  CHECK(config.seed == 42);
  CHECK(clab_best_constant(1.0, 6.0, &config, nullptr, &json) == CLAB_INVALID_INPUT);
  CHECK(std::string(clab_last_error()).find("attainment") != std::string::npos);
}
