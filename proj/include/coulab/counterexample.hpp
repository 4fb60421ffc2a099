#pragma once

#include <string>
#include <vector>

#include "coulab/quadrature.hpp"

namespace coulab {

// One tent u = tent(eps, R(eps), S(eps)) of the coupled family.
struct SweepRecord {
  double epsilon;
  double R;
  double S;
  double hs_norm_sq;   // |u|^2_{H^s}
  double coulomb;      // D(u)
  double lp_norm_p;    // |u|^p_{L^p}
  double energy_norm;  // (|u|^2_{H^s} + D(u)^{1/2})^{1/2}
  double ratio;        // |u|_{L^p} / energy_norm
  double lemma_ratio;  // |u|^2_{H^s} S^{2s-1} / (eps^2 R^2)
  bool converged;      // every quadrature met its tolerance
};

struct SweepResult {
  double s;
  double p;
  bool exploratory;  // s in (1, 3/2), outside the sharpness range
  std::vector<SweepRecord> records;
};

inline const std::vector<double> kDefaultEpsilons{0.2, 0.1, 0.05, 0.02, 0.01};

// Records come back in the order of `epsilons`, which must be strictly
// decreasing in (0, 1). H^s is the Dirichlet energy at s = 1 and spectral
// otherwise; D is the Newton-route Coulomb energy. Records are computed on up
// to `threads` worker threads.
SweepResult run_sweep(double s, double p, const std::vector<double>& epsilons, const QuadratureSpec& quad,
                      int threads = 1);

double check_lemma_bound(const SweepRecord& record, double s);

struct SlopeFit {
  double measured;   // least-squares slope of log |u|^p_{L^p} against log eps
  double predicted;  // p - (16s + 2)/(6s + 1)
};

// Needs at least 4 records spanning at least one decade of eps.
SlopeFit fit_slope(const std::vector<SweepRecord>& records, double p, double s);

struct TentClosedForms {
  double l2_sq;       // 4 pi eps^2 (2 S R^2 / 3 + S^3 / 15)
  double lp_p_lower;  // eps^p S R^2, the shape of the lower bound
};

TentClosedForms tent_closed_forms(double epsilon, double R, double S, double p);

// Header epsilon,R,S,hs_norm_sq,coulomb,lp_norm_p,energy_norm,ratio,lemma_ratio
// and one row per record with 17 significant digits.
std::string sweep_csv(const std::vector<SweepRecord>& records);

}  // namespace coulab
