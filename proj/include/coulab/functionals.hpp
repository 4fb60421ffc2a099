#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coulab/quadrature.hpp"
#include "coulab/radial_profile.hpp"

namespace coulab {

// All norms are of the radial function on R^3 with the given profile.

// (4 pi int r^2 |phi|^p dr)^{1/p}, p >= 1.
QuadResult lp_norm(const RadialProfile& profile, double p, const QuadratureSpec& quad);

// (4 pi int r^{2+a} |phi|^q dr)^{1/q}, q >= 1, a > -3.
QuadResult weighted_lq_norm(const RadialProfile& profile, double q, double a, const QuadratureSpec& quad);

// Homogeneous Sobolev norm from the frequency side, 0 < s < 3/2.
QuadResult sobolev_spectral(const RadialProfile& profile, double s, const QuadratureSpec& quad);

// The same norm from the real-space double integral, 0 < s < 1.
QuadResult sobolev_gagliardo(const RadialProfile& profile, double s, const QuadratureSpec& quad);

// 2^{2s-1} pi^{-3/2} Gamma((3+2s)/2) / |Gamma(-s)|.
double gagliardo_constant(double s);

// |grad phi|_{L^2} = (4 pi int r^2 phi'^2 dr)^{1/2}.
QuadResult dirichlet_energy(const RadialProfile& profile, const QuadratureSpec& quad);

// D(phi) = int int phi(x)^2 phi(y)^2 / |x - y| dx dy, by Newton's theorem.
QuadResult coulomb_newton(const RadialProfile& profile, const QuadratureSpec& quad);

// D(phi) = 16 pi^2 int_0^inf |f_hat(rho)|^2 d rho with f = phi^2.
QuadResult coulomb_spectral(const RadialProfile& profile, const QuadratureSpec& quad);

// (|phi|^2_{H^s} + D(phi)^{1/2})^{1/2}.
QuadResult energy_norm(const RadialProfile& profile, double s, const QuadratureSpec& quad);

// 4 pi int r^{3/2} phi^2 (1 + |log r|)^{-alpha} dr, alpha > 1/2.
QuadResult ruiz_functional(const RadialProfile& profile, double alpha, const QuadratureSpec& quad);

// 4 pi int r^{2-gamma} phi^2 dr, 0 < gamma < 3.
QuadResult hardy_weight_integral(const RadialProfile& profile, double gamma, const QuadratureSpec& quad);

// sup_r r^sigma |phi(r)| / (|phi|_{H^s}^theta |phi|_{L^q_a}^{1-theta}) with the
// decay exponents (theta, sigma) at d = 3. The sup is taken over 2048
// log-spaced radii plus the kinks and polished locally, so it is a lower
// bound on the true sup.
QuadResult pointwise_decay_ratio(const RadialProfile& profile, double s, double q, double a,
                                 const QuadratureSpec& quad);

struct FunctionalReport {
  std::string profile_id;
  double s = 1.0;
  std::map<double, QuadResult> lp;
  QuadResult hs_spectral;
  std::optional<QuadResult> hs_gagliardo;  // 0 < s < 1
  std::optional<QuadResult> dirichlet;     // s = 1
  QuadResult coulomb_newton;
  QuadResult coulomb_spectral;
  QuadResult energy_norm;

  // Relative disagreement of the two Coulomb routes and of the two H^s routes.
  double coulomb_delta() const;
  std::optional<double> hs_delta() const;
  bool all_converged() const;

  // Flat object: one key per entry plus a boolean "<key>_err" flag that is
  // true when the quadrature did not reach its tolerance.
  nlohmann::ordered_json to_json() const;
};

FunctionalReport functional_report(const RadialProfile& profile, const std::string& profile_id, double s,
                                   const std::vector<double>& ps, const QuadratureSpec& quad);

// Relative difference |x - y| / max(|x|, |y|), zero when both vanish.
double relative_gap(double x, double y);

}  // namespace coulab
