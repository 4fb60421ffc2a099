// Acceptance gate: runs every criterion at its stated tolerance and time
// budget and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "coulab/counterexample.hpp"
#include "coulab/exponents.hpp"
#include "coulab/functionals.hpp"
#include "coulab/optimize.hpp"
#include "coulab/verify.hpp"

using namespace coulab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

const QuadratureSpec quad{};

Outcome gaussian_oracles() {
  const auto g = RadialProfile::gaussian_mixture({1.0}, {0.5});
  const double worst = std::max({relative_gap(lp_norm(g, 2.0, quad).value, std::pow(kPi, 0.75)),
                                 relative_gap(sobolev_spectral(g, 1.0, quad).value, std::sqrt(1.5 * std::pow(kPi, 1.5))),
                                 relative_gap(sobolev_spectral(g, 0.5, quad).value, std::sqrt(2.0 * kPi)),
                                 relative_gap(coulomb_newton(g, quad).value, std::sqrt(2.0) * std::pow(kPi, 2.5))});
  return {worst <= 1e-6, fmt("max rel err %.3g <= 1e-6", worst)};
}

Outcome ball_oracle() {
  const double err = relative_gap(coulomb_newton(RadialProfile::ball(), quad).value, 32.0 * kPi * kPi / 15.0);
  return {err <= 1e-2, fmt("rel err %.3g <= 1e-2", err)};
}

Outcome dual_methods() {
  double coulomb = 0.0, sobolev = 0.0;
  for (const auto& [name, phi] : fixture_family()) {
    coulomb = std::max(coulomb, relative_gap(coulomb_newton(phi, quad).value, coulomb_spectral(phi, quad).value));
    for (double s : {0.6, 0.75, 0.9}) {
      sobolev = std::max(sobolev,
                         relative_gap(sobolev_gagliardo(phi, s, quad).value, sobolev_spectral(phi, s, quad).value));
    }
  }
  return {coulomb <= 1e-3 && sobolev <= 1e-3, fmt("coulomb gap %.3g, H^s gap %.3g, both <= 1e-3", coulomb, sobolev)};
}

Outcome pitt_suite() {
  double worst = 0.0;
  for (const auto& [name, phi] : fixture_family()) {
    for (double s : {0.6, 0.75, 1.0, 1.25}) {
      const double hs = sobolev_spectral(phi, s, quad).value;
      worst = std::max(worst, hardy_weight_integral(phi, 2.0 * s, quad).value / (pitt_constant(s) * hs * hs));
    }
  }
  return {worst <= 1.0 + 1e-6, fmt("max ratio %.6g <= 1 + 1e-6", worst)};
}

Outcome lemma_band() {
  double worst = 0.0;
  for (const auto& [s, p] : {std::pair{1.0, 2.4}, std::pair{0.75, 2.6}}) {
    const auto sweep = run_sweep(s, p, kDefaultEpsilons, quad);
    double lo = INFINITY, hi = 0.0;
    for (const auto& r : sweep.records) {
      lo = std::min(lo, r.lemma_ratio);
      hi = std::max(hi, r.lemma_ratio);
    }
    worst = std::max(worst, hi / lo);
  }
  return {worst <= 10.0, fmt("max/min %.4g <= 10", worst)};
}

std::vector<SweepResult> rate_sweeps;

Outcome rate_reproduction() {
  std::string detail;
  bool pass = true;
  for (const auto& [s, p] : {std::pair{1.0, 2.4}, std::pair{1.0, 18.0 / 7.0}, std::pair{1.0, 2.8},
                             std::pair{0.75, 2.6}}) {
    rate_sweeps.push_back(run_sweep(s, p, kDefaultEpsilons, quad));
    const auto fit = fit_slope(rate_sweeps.back().records, p, s);
    const double dev = std::abs(fit.measured - fit.predicted);
    pass = pass && dev <= 0.15 && rate_sweeps.back().records.size() == kDefaultEpsilons.size();
    detail += fmt("%.4f vs %.4f; ", fit.measured, fit.predicted);
  }
  detail += "each within 0.15";
  return {pass, detail};
}

Outcome monotonicity() {
  if (rate_sweeps.size() < 3) return {false, "rate sweeps missing"};
  const auto strictly = [](const SweepResult& sw, int sign) {
    for (std::size_t i = 1; i < sw.records.size(); ++i) {
      if (!(sign * (sw.records[i].ratio - sw.records[i - 1].ratio) > 0.0)) return false;
    }
    return true;
  };
  const bool up = strictly(rate_sweeps[0], 1);
  const bool down = strictly(rate_sweeps[2], -1);
  return {up && down, std::string("p=2.4 increasing: ") + (up ? "yes" : "no") +
                          ", p=2.8 decreasing: " + (down ? "yes" : "no")};
}

Outcome exponent_identities() {
  bool pass = radial_endpoint(Rational(1)) == Rational(18, 7);
  int points = 0;
  for (int i = 0; i <= 90; ++i) {
    const Rational s(55 + i, 100);
    const Rational sobolev_p = Rational(3) / (Rational(3) - Rational(2) * s);
    pass = pass && theta_gn(sobolev_p, s) == Rational(1);
    pass = pass && Rational(2) * corollary_range(s).lo == (Rational(16) * s + 2) / (Rational(6) * s + 1);
    pass = pass && radial_endpoint(s) < nonradial_endpoint(s) && nonradial_endpoint(s) < sobolev_endpoint(s);
    ++points;
  }
  return {pass && points == 91, fmt("%g grid points, exact rational comparisons", points)};
}

Outcome quotient_invariances() {
  double amp = 0.0, dil = 0.0;
  for (const auto& [name, phi] : fixture_family()) {
    for (const auto& [s, two_p] : {std::pair{1.0, 4.0}, std::pair{0.75, 3.0}}) {
      const double J = quotient_J(phi, two_p, s, quad).value;
      for (double t : {0.1, 7.0}) amp = std::max(amp, relative_gap(quotient_J(phi.scaled(t), two_p, s, quad).value, J));
      for (double lambda : {0.5, 2.0}) {
        dil = std::max(dil, relative_gap(quotient_J(phi.dilated(lambda), two_p, s, quad).value, J));
      }
    }
  }
  return {amp <= 1e-9 && dil <= 1e-4, fmt("amplitude %.3g <= 1e-9, dilation %.3g <= 1e-4", amp, dil)};
}

Outcome optimizer_contract() {
  OptimizerConfig config;
  config.seed = 42;
  const auto a = best_constant_search(1.0, 4.0, config, quad);
  const auto b = best_constant_search(1.0, 4.0, config, quad);
  config.seed = 43;
  const auto c = best_constant_search(1.0, 4.0, config, quad);
  const bool reproducible = a.to_json().dump() == b.to_json().dump();
  const double spread = relative_gap(a.best_J, c.best_J);
  const bool pass = a.best_J >= 0.44669 && reproducible && spread <= 0.01;
  return {pass, fmt("best_J %.8f >= 0.44669, seed 42/43 gap %.3g <= 0.01", a.best_J, spread) +
                    (reproducible ? ", bit-reproducible" : ", NOT reproducible")};
}

Outcome lambda_minimization() {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> coeff(0.01, 100.0), power(0.05, 5.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double A = coeff(rng), B = coeff(rng), a = power(rng), b = power(rng);
    const auto m = lambda_minimize(A, B, a, b);
    const double l = m.lambda_star;
    // d/d lambda of A l^a + B l^-b, both raw and in the scale-free form l f'(l).
    const double raw = std::abs(a * A * std::pow(l, a - 1.0) - b * B * std::pow(l, -b - 1.0));
    const double scaled = std::abs(a * A * std::pow(l, a) - b * B * std::pow(l, -b));
    worst = std::max({worst, raw / m.min_value, scaled / m.min_value});
  }
  const auto sym = lambda_minimize(1.0, 1.0, 1.0, 1.0);
  const bool exact = sym.lambda_star == 1.0 && sym.min_value == 2.0;
  return {worst <= 1e-10 && exact,
          fmt("max residual/min %.3g <= 1e-10, symmetric case exact: ", worst) + (exact ? "yes" : "no")};
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"gaussian oracle suite", 5.0, gaussian_oracles},
      {"ball coulomb oracle", 5.0, ball_oracle},
      {"dual-method agreement", 60.0, dual_methods},
      {"pitt suite", 30.0, pitt_suite},
      {"tent lemma band", 120.0, lemma_band},
      {"divergence rate reproduction", 300.0, rate_reproduction},
      {"embedding-ratio monotonicity", 300.0, monotonicity},
      {"exponent identities", 1.0, exponent_identities},
      {"quotient invariances", 60.0, quotient_invariances},
      {"optimizer contract", 300.0, optimizer_contract},
      {"lambda minimization", 1.0, lambda_minimization},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < c.budget_seconds;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s  %2zu  %-30s %s; %.3f s < %g s%s\n", pass ? "PASS" : "FAIL", i + 1, c.name, out.detail.c_str(),
                elapsed, c.budget_seconds, in_time ? "" : " (over budget)");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
