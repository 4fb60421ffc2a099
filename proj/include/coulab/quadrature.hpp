#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace coulab {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  int max_subdiv = 2000;

  void validate() const;
};

// Value of a numerical integral together with its error estimate.
// `converged` is false when the subdivision budget ran out before the
// requested tolerance was met; the value is still the best estimate.
struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;

  QuadResult& operator+=(const QuadResult& other) {
    value += other.value;
    error += other.error;
    converged = converged && other.converged;
    return *this;
  }
};

struct IntegralOptions {
  // Interior points where the integrand has kinks or changes character.
  std::vector<double> breakpoints;
  // Exponent alpha > -1 of an integrable endpoint behaviour (r - lo)^alpha
  // at the lower limit. Zero means the integrand is regular there.
  double lo_singularity = 0.0;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Globally adaptive Gauss-Kronrod (7/15) integration of f over [lo, hi].
// hi may be +infinity; the unbounded piece is mapped with r = a + t/(1-t).
// A declared lower-endpoint singularity is removed with the power map
// r = lo + L*u^(1/(1+alpha)).
QuadResult radial_integral(const std::function<double(double)>& f, double lo, double hi,
                           const QuadratureSpec& quad, const IntegralOptions& options = {});

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached rule with n points, 1 <= n <= 64. Thread-safe.
const GaussRule& gauss_legendre(int n);

// Composite Gauss-Legendre sum over the panels delimited by `edges`.
double composite_gauss(const std::function<double(double)>& f, std::span<const double> edges,
                       int points_per_panel);

}  // namespace coulab
