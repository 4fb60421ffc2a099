#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "coulab/quadrature.hpp"
#include "coulab/radial_profile.hpp"

namespace coulab {

// J(phi) = |phi|_{L^{2p}} / (|phi|_{H^s}^{theta/(2-theta)} D(phi)^{(1-theta)/(4-2theta)})
// with p = two_p / 2 and theta = theta_gn(p, s). Invariant under phi -> t phi
// and phi -> phi(lambda .). Needs p in the corollary range of s.
QuadResult quotient_J(const RadialProfile& profile, double two_p, double s, const QuadratureSpec& quad);

struct LambdaMinimum {
  double lambda_star;  // +inf when a = 0
  double min_value;
};

// min over lambda > 0 of A lambda^a + B lambda^{-b}; A, B > 0, a >= 0, b > 0.
// At a = 0 the infimum A is approached as lambda -> inf and lambda_star = inf.
LambdaMinimum lambda_minimize(double A, double B, double a, double b);

struct OptimizerConfig {
  int family_size = 4;  // Gaussians in the mixture
  int restarts = 8;
  int max_iters = 2000;
  std::uint64_t seed = 42;
  double simplex_tol = 1e-5;
  int threads = 1;

  void validate() const;
};

struct BestConstantResult {
  double s;
  double two_p;
  double best_J;
  double gaussian_J;  // J of exp(-r^2/2), the first starting point
  GaussianMixture params;
  std::vector<double> history;  // best J per restart
  bool stagnated;               // no restart improved on the Gaussian

  nlohmann::ordered_json to_json() const;
};

// Nelder-Mead over signed coefficients and log-widths of a Gaussian mixture;
// every candidate is rescaled to |phi|_{H^s} = 1 before J is evaluated.
// Restart 0 starts at exp(-r^2/2); restart k > 0 draws its start from a
// private generator seeded with (seed, k). Deterministic for any thread count.
BestConstantResult best_constant_search(double s, double two_p, const OptimizerConfig& config,
                                        const QuadratureSpec& quad);

// min over the family of D(phi) / V_alpha(phi)^2.
double ruiz_constant_estimate(const std::vector<RadialProfile>& family, double alpha, const QuadratureSpec& quad);

}  // namespace coulab
