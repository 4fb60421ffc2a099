#include "coulab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <random>
#include <thread>

#include "coulab/error.hpp"
#include "coulab/exponents.hpp"
#include "coulab/functionals.hpp"
#include "coulab/nelder_mead.hpp"

namespace coulab {

namespace {

constexpr double kLogWidthBound = 8.0;

struct Candidate {
  double J;
  GaussianMixture params;
};

RadialProfile mixture_from(const std::vector<double>& x, std::size_t m) {
  std::vector<double> c(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<double> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = std::exp(std::clamp(x[m + i], -kLogWidthBound, kLogWidthBound));
  return RadialProfile::gaussian_mixture(std::move(c), std::move(w));
}

// J of the mixture after rescaling to unit H^s norm; nullopt for degenerate
// candidates.
std::optional<Candidate> evaluate(const std::vector<double>& x, std::size_t m, double s, double two_p,
                                  const QuadratureSpec& quad) {
  try {
    const RadialProfile raw = mixture_from(x, m);
    if (raw.is_zero()) return std::nullopt;
    const double hs = sobolev_spectral(raw, s, quad).value;
    if (!(hs > 0.0) || !std::isfinite(hs)) return std::nullopt;
    const RadialProfile unit = raw.scaled(1.0 / hs);
    const double J = quotient_J(unit, two_p, s, quad).value;
    if (!std::isfinite(J)) return std::nullopt;
    return Candidate{J, std::get<GaussianMixture>(unit.kind())};
  } catch (const InputError&) {
    return std::nullopt;
  } catch (const NumericError&) {
    return std::nullopt;
  }
}

std::vector<double> start_point(std::size_t m, std::size_t restart, std::uint64_t seed) {
  std::vector<double> x(2 * m, 0.0);
  x[0] = 1.0;
  if (restart == 0) {
    for (std::size_t i = 0; i < m; ++i) x[m + i] = std::log(0.5);
    return x;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> log_width(std::log(0.05), std::log(5.0));
  for (std::size_t i = 1; i < m; ++i) x[i] = coeff(rng);
  for (std::size_t i = 0; i < m; ++i) x[m + i] = log_width(rng);
  return x;
}

Candidate run_restart(std::size_t restart, double s, double two_p, const OptimizerConfig& config,
                      const QuadratureSpec& quad) {
  const auto m = static_cast<std::size_t>(config.family_size);
  const auto x0 = start_point(m, restart, config.seed);
  const auto objective = [&](const std::vector<double>& x) {
    const auto c = evaluate(x, m, s, two_p, quad);
    return c ? -c->J : std::numeric_limits<double>::infinity();
  };
  NelderMeadOptions opts;
  opts.max_iters = config.max_iters;
  opts.tol = config.simplex_tol;
  const NelderMeadResult nm = nelder_mead(objective, x0, opts);
  auto best = evaluate(nm.x, m, s, two_p, quad);
  auto start = evaluate(x0, m, s, two_p, quad);
  if (best && (!start || best->J >= start->J)) return *best;
  if (start) return *start;
  return Candidate{0.0, GaussianMixture{std::vector<double>(m, 0.0), std::vector<double>(m, 1.0)}};
}

}  // namespace

QuadResult quotient_J(const RadialProfile& profile, double two_p, double s, const QuadratureSpec& quad) {
  require(std::isfinite(s) && s > 0.5 && s < 1.5, "quotient needs 1/2 < s < 3/2");
  require(std::isfinite(two_p), "two_p must be finite");
  const double p = two_p / 2.0;
  require(corollary_range(s).contains(p), "p = two_p/2 must lie in ((8s+1)/(6s+1), 3/(3-2s)]");
  require(!profile.is_zero(), "quotient is undefined for the zero profile");
  const double theta = theta_gn(p, s);
  const double alpha = theta / (2.0 - theta);
  const double beta = (1.0 - theta) / (4.0 - 2.0 * theta);
  const QuadResult l = lp_norm(profile, two_p, quad);
  const QuadResult h = sobolev_spectral(profile, s, quad);
  const QuadResult d = coulomb_newton(profile, quad);
  const double J = l.value / (std::pow(h.value, alpha) * std::pow(d.value, beta));
  const double err = J * (l.error / l.value + alpha * h.error / h.value + beta * d.error / d.value);
  return QuadResult{J, err, l.converged && h.converged && d.converged};
}

LambdaMinimum lambda_minimize(double A, double B, double a, double b) {
  require(std::isfinite(A) && A > 0.0, "lambda minimization needs A > 0");
  require(std::isfinite(B) && B > 0.0, "lambda minimization needs B > 0 (at B = 0 the infimum 0 is not attained)");
  require(std::isfinite(a) && a >= 0.0, "lambda minimization needs a >= 0");
  require(std::isfinite(b) && b > 0.0, "lambda minimization needs b > 0");
  if (a == 0.0) return {std::numeric_limits<double>::infinity(), A};
  const double lambda = std::pow(b * B / (a * A), 1.0 / (a + b));
  return {lambda, A * std::pow(lambda, a) + B * std::pow(lambda, -b)};
}

void OptimizerConfig::validate() const {
  require(family_size >= 1, "family size must be at least 1");
  require(restarts >= 1, "restarts must be at least 1");
  require(max_iters >= 1, "max_iters must be at least 1");
  require(simplex_tol > 0.0 && std::isfinite(simplex_tol), "simplex_tol must be positive");
  require(threads >= 1, "threads must be at least 1");
}

nlohmann::ordered_json BestConstantResult::to_json() const {
  nlohmann::ordered_json j;
  j["s"] = s;
  j["two_p"] = two_p;
  j["best_J"] = best_J;
  j["gaussian_J"] = gaussian_J;
  j["params"] = {{"coeffs", params.coeffs}, {"widths", params.widths}};
  j["history"] = history;
  j["stagnated"] = stagnated;
  return j;
}

BestConstantResult best_constant_search(double s, double two_p, const OptimizerConfig& config,
                                        const QuadratureSpec& quad) {
  config.validate();
  quad.validate();
  require(std::isfinite(s) && s > 0.5 && s < 1.5, "search needs 1/2 < s < 3/2");
  const double p = two_p / 2.0;
  const auto range = corollary_range(s);
  require(std::isfinite(two_p) && p > range.lo && p <= range.hi, "p = two_p/2 must lie in ((8s+1)/(6s+1), 3/(3-2s)]");
  require(p < range.hi,
          "two_p = 6/(3-2s) is the Sobolev endpoint, excluded from attainment of the best constant; "
          "choose two_p strictly inside the range");

  const auto restarts = static_cast<std::size_t>(config.restarts);
  std::vector<Candidate> results(restarts);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(config.threads), restarts);
  if (workers <= 1) {
    for (std::size_t k = 0; k < restarts; ++k) results[k] = run_restart(k, s, two_p, config, quad);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < restarts; k += workers) results[k] = run_restart(k, s, two_p, config, quad);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  BestConstantResult out{};
  out.s = s;
  out.two_p = two_p;
  out.gaussian_J = quotient_J(RadialProfile::gaussian_mixture({1.0}, {0.5}), two_p, s, quad).value;
  std::size_t best = 0;
  for (std::size_t k = 0; k < restarts; ++k) {
    out.history.push_back(results[k].J);
    if (results[k].J > results[best].J) best = k;
  }
  out.best_J = results[best].J;
  out.params = results[best].params;
  out.stagnated = !(out.best_J > out.gaussian_J);
  return out;
}

double ruiz_constant_estimate(const std::vector<RadialProfile>& family, double alpha, const QuadratureSpec& quad) {
  require(!family.empty(), "Ruiz estimate needs a nonempty family");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& phi : family) {
    require(!phi.is_zero(), "Ruiz estimate rejects the zero profile");
    const double v = ruiz_functional(phi, alpha, quad).value;
    const double d = coulomb_newton(phi, quad).value;
    best = std::min(best, d / (v * v));
  }
  return best;
}

}  // namespace coulab
