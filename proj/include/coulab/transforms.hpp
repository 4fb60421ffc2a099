#pragma once

#include <string>
#include <vector>

#include "coulab/quadrature.hpp"
#include "coulab/radial_profile.hpp"

namespace coulab {

// phi_hat(xi) = (2 pi)^(-3/2) int exp(-i x.xi) phi(x) dx, which for radial
// phi reduces to sqrt(2/pi)/rho * int_0^inf r sin(rho r) phi(r) dr.
inline constexpr const char* kFourierConvention = "unitary-3d";

struct SpectralProfile {
  std::vector<double> rhos;
  std::vector<double> values;
  std::vector<bool> converged;
  std::string convention_tag = kFourierConvention;
};

SpectralProfile radial_fourier(const RadialProfile& profile, const std::vector<double>& rhos,
                               const QuadratureSpec& quad);

// The rho -> 0 limit (2 pi)^(-3/2) * 4 pi * int r^2 phi dr.
QuadResult radial_fourier_at_zero(const RadialProfile& profile, const QuadratureSpec& quad);

struct Reconstruction {
  RadialProfile profile;
  std::vector<double> values;  // samples at the requested radii
  bool covered;                // spectral tail negligible at the requested tolerance
};

// Inverse transform of a sampled spectrum, cubic Hermite between samples and
// constant on [0, rhos[0]]; `covered` checks that rho |phi_hat| is negligible
// over the top tenth of the sampled frequency range. The result is a piecewise-linear profile through
// the samples at rs, closed by a zero knot one spacing past rs.back().
Reconstruction inverse_radial_fourier(const SpectralProfile& spectral, const std::vector<double>& rs,
                                      const QuadratureSpec& quad);

struct PlancherelResult {
  QuadResult l2_direct;
  QuadResult l2_spectral;
};

PlancherelResult plancherel_check(const RadialProfile& profile, const QuadratureSpec& quad);

// 512 geometric frequencies on [1e-3, rho_max], rho_max chosen so that the
// order-s spectral integrand 4 pi rho^(2s+2) |phi_hat|^2 is below abs_tol.
std::vector<double> default_spectral_grid(const RadialProfile& profile, const QuadratureSpec& quad,
                                          double s = 1.0);

}  // namespace coulab
