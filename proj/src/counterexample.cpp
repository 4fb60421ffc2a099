#include "coulab/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <thread>

#include "coulab/error.hpp"
#include "coulab/exponents.hpp"
#include "coulab/functionals.hpp"
#include "coulab/radial_profile.hpp"

namespace coulab {

namespace {

SweepRecord sweep_record(double s, double p, double epsilon, const QuadratureSpec& quad) {
  const Coupling c = coupling(epsilon, s);
  const RadialProfile u = RadialProfile::tent(epsilon, c.R, c.S);
  const QuadResult hs = s == 1.0 ? dirichlet_energy(u, quad) : sobolev_spectral(u, s, quad);
  const QuadResult d = coulomb_newton(u, quad);
  const QuadResult lp = lp_norm(u, p, quad);
  SweepRecord r{};
  r.epsilon = epsilon;
  r.R = c.R;
  r.S = c.S;
  r.hs_norm_sq = hs.value * hs.value;
  r.coulomb = d.value;
  r.lp_norm_p = std::pow(lp.value, p);
  r.energy_norm = std::sqrt(r.hs_norm_sq + std::sqrt(r.coulomb));
  r.ratio = lp.value / r.energy_norm;
  r.converged = hs.converged && d.converged && lp.converged;
  r.lemma_ratio = check_lemma_bound(r, s);
  return r;
}

// A numeric failure marks the record and leaves the rest of the sweep running.
SweepRecord guarded_record(double s, double p, double epsilon, const QuadratureSpec& quad) {
  try {
    return sweep_record(s, p, epsilon, quad);
  } catch (const NumericError&) {
    const double nan = std::nan("");
    const Coupling c = coupling(epsilon, s);
    return SweepRecord{epsilon, c.R, c.S, nan, nan, nan, nan, nan, nan, false};
  }
}

}  // namespace

SweepResult run_sweep(double s, double p, const std::vector<double>& epsilons, const QuadratureSpec& quad,
                      int threads) {
  require(std::isfinite(s) && s > 0.5 && s < 1.5, "sweep needs 1/2 < s < 3/2");
  require(std::isfinite(p) && p > 1.0, "sweep needs p > 1");
  require(!epsilons.empty(), "sweep needs at least one epsilon");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    require(std::isfinite(epsilons[i]) && epsilons[i] > 0.0 && epsilons[i] < 1.0, "sweep epsilons must lie in (0, 1)");
    if (i > 0) require(epsilons[i] < epsilons[i - 1], "sweep epsilons must be strictly decreasing");
  }
  quad.validate();

  SweepResult out{s, p, s > 1.0, std::vector<SweepRecord>(epsilons.size())};
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, epsilons.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < epsilons.size(); ++i) out.records[i] = guarded_record(s, p, epsilons[i], quad);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < epsilons.size(); i += workers) out.records[i] = guarded_record(s, p, epsilons[i], quad);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

double check_lemma_bound(const SweepRecord& record, double s) {
  return record.hs_norm_sq * std::pow(record.S, 2.0 * s - 1.0) / (record.epsilon * record.epsilon * record.R * record.R);
}

SlopeFit fit_slope(const std::vector<SweepRecord>& records, double p, double s) {
  require(records.size() >= 4, "slope fit needs at least 4 records");
  double lo = records.front().epsilon;
  double hi = lo;
  for (const auto& r : records) {
    require(r.epsilon > 0.0 && r.lp_norm_p > 0.0, "slope fit needs positive epsilon and L^p values");
    lo = std::min(lo, r.epsilon);
    hi = std::max(hi, r.epsilon);
  }
  require(hi >= 10.0 * lo * (1.0 - 1e-12), "slope fit needs epsilons spanning at least one decade");
  const double n = static_cast<double>(records.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& r : records) {
    sx += std::log(r.epsilon);
    sy += std::log(r.lp_norm_p);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& r : records) {
    const double dx = std::log(r.epsilon) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(r.lp_norm_p) - my);
  }
  return {sxy / sxx, p - (16.0 * s + 2.0) / (6.0 * s + 1.0)};
}

TentClosedForms tent_closed_forms(double epsilon, double R, double S, double p) {
  RadialProfile::tent(epsilon, R, S);  // validates
  require(std::isfinite(p) && p >= 1.0, "p must be at least 1");
  const double l2 = 4.0 * std::numbers::pi * epsilon * epsilon * (2.0 * S * R * R / 3.0 + S * S * S / 15.0);
  return {l2, std::pow(epsilon, p) * S * R * R};
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out = "epsilon,R,S,hs_norm_sq,coulomb,lp_norm_p,energy_norm,ratio,lemma_ratio\n";
  char buf[512];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.epsilon, r.R, r.S,
                  r.hs_norm_sq, r.coulomb, r.lp_norm_p, r.energy_norm, r.ratio, r.lemma_ratio);
    out += buf;
  }
  return out;
}

}  // namespace coulab
