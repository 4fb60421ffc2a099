#pragma once

#include <string>
#include <variant>
#include <vector>

namespace coulab {

// Tent of height epsilon centred at R with half-width S (annulus profile of
// the sharpness counterexample).
struct Tent {
  double epsilon;
  double R;
  double S;
};

// sum_i coeffs[i] * exp(-widths[i] * r^2). A width is a decay rate, not a
// standard deviation.
struct GaussianMixture {
  std::vector<double> coeffs;
  std::vector<double> widths;
};

// Continuous piecewise-linear profile. Constant on [0, knots[0]], zero
// beyond the last knot; the last value must therefore be zero.
struct PiecewiseLinear {
  std::vector<double> knots;
  std::vector<double> values;
};

// One polynomial piece sum_k c[k] * (r - lo)^k on [lo, hi].
struct PolyPiece {
  double lo;
  double hi;
  std::vector<double> c;
};

// A radial function on R^3 identified with its profile on [0, inf).
// Immutable after construction.
class RadialProfile {
 public:
  using Kind = std::variant<Tent, GaussianMixture, PiecewiseLinear>;

  static RadialProfile tent(double epsilon, double R, double S);
  static RadialProfile gaussian_mixture(std::vector<double> coeffs, std::vector<double> widths);
  static RadialProfile piecewise_linear(std::vector<double> knots, std::vector<double> values);
  static RadialProfile zero();
  // Unit-ball indicator as a steep linear ramp of the given width centred on r = 1.
  static RadialProfile ball(double ramp_width = 1e-6);

  const Kind& kind() const { return kind_; }
  bool is_gaussian_mixture() const { return std::holds_alternative<GaussianMixture>(kind_); }
  bool is_zero() const;

  double operator()(double r) const;
  // Right derivative (left derivative at the end of the support).
  double derivative(double r) const;
  // phi(r + h) - phi(r) without cancellation for small h >= 0.
  double increment(double r, double h) const;

  // Points where the profile is not smooth, sorted.
  std::vector<double> kinks() const;
  // Characteristic radii 1/sqrt(width) of the Gaussian components.
  std::vector<double> scales() const;
  // Smallest radius where the profile may be nonzero.
  double support_begin() const;
  // End of the support; for Gaussian mixtures the radius beyond which every
  // component is below rel * sum|coeffs|.
  double support_end(double rel = 1e-13) const;
  bool compact() const { return !is_gaussian_mixture(); }
  double sup_abs() const;

  // Polynomial pieces of the compactly supported kinds.
  std::vector<PolyPiece> pieces() const;

  RadialProfile scaled(double t) const;       // t * phi
  RadialProfile dilated(double lambda) const;  // phi(lambda * r)

 private:
  explicit RadialProfile(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

// Pointwise value; rejects r < 0.
double evaluate(const RadialProfile& profile, double r);

RadialProfile make_tent(double epsilon, double R, double S);

}  // namespace coulab
