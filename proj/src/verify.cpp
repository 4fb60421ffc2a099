#include "coulab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "coulab/counterexample.hpp"
#include "coulab/error.hpp"
#include "coulab/exponents.hpp"
#include "coulab/functionals.hpp"
#include "coulab/optimize.hpp"
#include "coulab/transforms.hpp"

namespace coulab {

namespace {

constexpr double kPi = std::numbers::pi;

CheckResult at_most(std::string name, double measured, double bound) {
  return {std::move(name), measured, bound, measured <= bound};
}

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

void identities(std::vector<CheckResult>& out, double tol, const QuadratureSpec& quad) {
  const auto gauss = RadialProfile::gaussian_mixture({1.0}, {0.5});
  out.push_back(at_most("gaussian.l2", relative_gap(lp_norm(gauss, 2.0, quad).value, std::pow(kPi, 0.75)), 1e-6));
  out.push_back(at_most("gaussian.h1",
                        relative_gap(sobolev_spectral(gauss, 1.0, quad).value, std::sqrt(1.5 * std::pow(kPi, 1.5))),
                        1e-6));
  out.push_back(
      at_most("gaussian.h1/2", relative_gap(sobolev_spectral(gauss, 0.5, quad).value, std::sqrt(2.0 * kPi)), 1e-6));
  out.push_back(at_most("gaussian.coulomb",
                        relative_gap(coulomb_newton(gauss, quad).value, std::sqrt(2.0) * std::pow(kPi, 2.5)), 1e-6));
  out.push_back(at_most("ball.coulomb", relative_gap(coulomb_newton(RadialProfile::ball(), quad).value,
                                                     32.0 * kPi * kPi / 15.0),
                        1e-2));
  for (const auto& [name, phi] : fixture_family()) {
    out.push_back(at_most(name + ".coulomb.newton_vs_spectral",
                          relative_gap(coulomb_newton(phi, quad).value, coulomb_spectral(phi, quad).value), tol));
    const auto pl = plancherel_check(phi, quad);
    out.push_back(at_most(name + ".plancherel", relative_gap(pl.l2_direct.value, pl.l2_spectral.value), 1e-5));
    out.push_back(at_most(name + ".dirichlet_vs_spectral",
                          relative_gap(dirichlet_energy(phi, quad).value, sobolev_spectral(phi, 1.0, quad).value),
                          1e-5));
    for (double s : {0.6, 0.75, 0.9}) {
      out.push_back(at_most(name + ".hs" + fmt("%g", s) + ".gagliardo_vs_spectral",
                            relative_gap(sobolev_gagliardo(phi, s, quad).value, sobolev_spectral(phi, s, quad).value),
                            tol));
    }
  }
}

void pitt(std::vector<CheckResult>& out, const QuadratureSpec& quad) {
  for (const auto& [name, phi] : fixture_family()) {
    for (double s : {0.6, 0.75, 1.0, 1.25}) {
      const double hardy = hardy_weight_integral(phi, 2.0 * s, quad).value;
      const double hs = sobolev_spectral(phi, s, quad).value;
      out.push_back(at_most(name + ".pitt" + fmt("%g", s), hardy / (pitt_constant(s) * hs * hs), 1.0 + 1e-6));
      out.push_back(
          at_most(name + ".pitt_sharp" + fmt("%g", s), hardy / (pitt_sharp_constant(s) * hs * hs), 1.0 + 1e-6));
    }
  }
}

void scaling(std::vector<CheckResult>& out, const QuadratureSpec& quad) {
  for (const auto& [name, phi] : fixture_family()) {
    for (double t : {0.5, 3.0}) {
      const auto scaled = phi.scaled(t);
      const std::string tag = name + ".t" + fmt("%g", t);
      out.push_back(at_most(tag + ".lp_homogeneity",
                            relative_gap(lp_norm(scaled, 3.0, quad).value, t * lp_norm(phi, 3.0, quad).value), 1e-9));
      out.push_back(at_most(tag + ".coulomb_homogeneity",
                            relative_gap(coulomb_newton(scaled, quad).value,
                                         std::pow(t, 4.0) * coulomb_newton(phi, quad).value),
                            1e-9));
      out.push_back(at_most(tag + ".sobolev_homogeneity",
                            relative_gap(sobolev_spectral(scaled, 0.75, quad).value,
                                         t * sobolev_spectral(phi, 0.75, quad).value),
                            1e-9));
    }
    for (double lambda : {0.5, 2.0}) {
      const auto dil = phi.dilated(lambda);
      const std::string tag = name + ".lambda" + fmt("%g", lambda);
      const double s = 0.75;
      const double h0 = sobolev_spectral(phi, s, quad).value;
      const double h1 = sobolev_spectral(dil, s, quad).value;
      out.push_back(at_most(tag + ".sobolev_dilation",
                            relative_gap(h1 * h1, std::pow(lambda, 2.0 * s - 3.0) * h0 * h0), 1e-4));
      out.push_back(at_most(tag + ".coulomb_dilation",
                            relative_gap(coulomb_newton(dil, quad).value,
                                         std::pow(lambda, -5.0) * coulomb_newton(phi, quad).value),
                            1e-4));
    }
    for (const auto& [s, two_p] : {std::pair{1.0, 4.0}, std::pair{0.75, 3.0}}) {
      const std::string tag = name + ".J(s=" + fmt("%g", s) + ",2p=" + fmt("%g", two_p) + ")";
      const double J = quotient_J(phi, two_p, s, quad).value;
      out.push_back(at_most(tag + ".amplitude", relative_gap(quotient_J(phi.scaled(2.0), two_p, s, quad).value, J),
                            1e-9));
      for (double lambda : {0.5, 2.0}) {
        out.push_back(at_most(tag + ".dilation" + fmt("%g", lambda),
                              relative_gap(quotient_J(phi.dilated(lambda), two_p, s, quad).value, J), 1e-4));
      }
    }
  }
}

void lemma_bounds(std::vector<CheckResult>& out, const QuadratureSpec& quad) {
  for (const auto& [s, p] : {std::pair{1.0, 2.4}, std::pair{0.75, 2.6}}) {
    const std::string tag = "sweep(s=" + fmt("%g", s) + ",p=" + fmt("%g", p) + ")";
    const SweepResult sweep = run_sweep(s, p, kDefaultEpsilons, quad);
    double lo = INFINITY, hi = 0.0, clo = INFINITY, chi = 0.0, lp_lo = INFINITY;
    for (const auto& r : sweep.records) {
      lo = std::min(lo, r.lemma_ratio);
      hi = std::max(hi, r.lemma_ratio);
      const double c = r.coulomb / (std::pow(r.epsilon, 4.0) * r.S * r.S * std::pow(r.R, 3.0));
      clo = std::min(clo, c);
      chi = std::max(chi, c);
      lp_lo = std::min(lp_lo, r.lp_norm_p / tent_closed_forms(r.epsilon, r.R, r.S, p).lp_p_lower);
    }
    out.push_back(at_most(tag + ".lemma_band", hi / lo, 10.0));
    out.push_back(at_most(tag + ".coulomb_band", chi / clo, 10.0));
    out.push_back({tag + ".lp_lower_positive", lp_lo, 0.0, lp_lo > 0.0, ">"});
    const SlopeFit fit = fit_slope(sweep.records, p, s);
    out.push_back(at_most(tag + ".slope", std::abs(fit.measured - fit.predicted), 0.15));
  }
}

}  // namespace

std::vector<std::pair<std::string, RadialProfile>> fixture_family() {
  return {
      {"gaussian", RadialProfile::gaussian_mixture({1.0}, {0.5})},
      {"tent", RadialProfile::tent(1.0, 2.0, 1.0)},
      {"mixture", RadialProfile::gaussian_mixture({1.0, 0.6}, {0.4, 2.5})},
  };
}

bool known_suite(const std::string& suite) {
  return suite == "identities" || suite == "pitt" || suite == "scaling" || suite == "lemma-bounds" || suite == "all";
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, double tol, const QuadratureSpec& quad) {
  require(known_suite(suite), "unknown verify suite '" + suite + "'");
  require(std::isfinite(tol) && tol > 0.0, "verify tolerance must be positive");
  quad.validate();
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "identities") identities(out, tol, quad);
  if (all || suite == "pitt") pitt(out, quad);
  if (all || suite == "scaling") scaling(out, quad);
  if (all || suite == "lemma-bounds") lemma_bounds(out, quad);
  return out;
}

std::string format_checks(const std::vector<CheckResult>& checks) {
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::string out;
  char buf[128];
  for (const auto& c : checks) {
    out += c.name + std::string(width - c.name.size() + 2, ' ');
    std::snprintf(buf, sizeof buf, "%-24.12g %-2s %-12.6g %s\n", c.measured, c.relation.c_str(), c.bound,
                  c.pass ? "pass" : "FAIL");
    out += buf;
  }
  return out;
}

}  // namespace coulab
