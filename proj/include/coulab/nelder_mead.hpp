#pragma once

#include <functional>
#include <vector>

namespace coulab {

struct NelderMeadOptions {
  int max_iters = 2000;
  // Stop when the spread of function values over the simplex falls below
  // tol * (|f_best| + tol).
  double tol = 1e-5;
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  int iterations;
  int evaluations;
  bool converged;
};

// Minimizes f from x0 with the standard reflection/expansion/contraction/
// shrink coefficients (1, 2, 1/2, 1/2). Deterministic.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                             const NelderMeadOptions& options = {});

}  // namespace coulab
