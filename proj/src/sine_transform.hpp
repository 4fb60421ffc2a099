#pragma once

#include <utility>
#include <vector>

#include "coulab/quadrature.hpp"
#include "coulab/radial_profile.hpp"

namespace coulab::detail {

// A polynomial piece with its derivative tables precomputed.
struct PreparedPiece {
  double lo;
  double hi;
  std::vector<std::vector<double>> derivatives;  // P, P', P'', ...
};

PreparedPiece prepare(const PolyPiece& piece);

// G(rho) = sqrt(2/pi) * int_0^inf g(r) sin(rho r) dr for a function g that is
// either a sum of amp * r * exp(-rate r^2) or a continuous piecewise
// polynomial vanishing at r = 0. With g = r * phi(r) the unitary radial
// Fourier transform is phi_hat(rho) = G(rho) / rho.
class SineTransform {
 public:
  static SineTransform of_profile(const RadialProfile& profile);  // g = r phi
  static SineTransform of_density(const RadialProfile& profile);  // g = r phi^2
  static SineTransform of_pieces(std::vector<PolyPiece> pieces);

  double operator()(double rho) const;

  bool gaussian() const { return gaussian_; }
  const std::vector<double>& rates() const { return rates_; }
  // Sum of squared jumps of g' over r > 0; fixes the rho^-2 asymptote of G.
  double kink_energy() const;
  // Positions r > 0 and sizes of the jumps of g'.
  std::vector<std::pair<double, double>> kink_jumps() const;
  // Largest breakpoint and the smallest frequency separating breakpoints.
  double max_radius() const;
  double min_separation() const;

 private:
  bool gaussian_ = false;
  std::vector<double> amps_;
  std::vector<double> rates_;
  std::vector<PolyPiece> pieces_;
  std::vector<PreparedPiece> prepared_;
};

// Exact int_lo^hi P(r - lo) sin(rho r) dr for the polynomial of a piece.
double piece_sine_integral(const PolyPiece& piece, double rho);
double piece_sine_integral(const PreparedPiece& piece, double rho);

// int_0^inf prefactor * rho^w * G(rho)^2 d rho for -3 < w < 3.
QuadResult spectral_energy(const SineTransform& transform, double w, double prefactor,
                           const QuadratureSpec& quad);

// Polynomial helpers on coefficient vectors (ascending powers).
std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b);
double poly_eval(const std::vector<double>& c, double x);

}  // namespace coulab::detail
