#include "coulab/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "coulab/error.hpp"

namespace coulab {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                             const NelderMeadOptions& options) {
  require(!x0.empty(), "Nelder-Mead needs at least one parameter");
  require(options.max_iters >= 1 && options.tol > 0.0 && options.initial_step > 0.0,
          "invalid Nelder-Mead options");
  const std::size_t n = x0.size();
  int evaluations = 0;
  const auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += options.initial_step;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  int iter = 0;
  bool converged = false;
  for (; iter < options.max_iters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];
    if (std::abs(vals[worst] - vals[best]) <= options.tol * (std::abs(vals[best]) + options.tol)) {
      converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);
    }
    const auto along = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
      return x;
    };

    auto reflected = along(-1.0);
    const double fr = eval(reflected);
    if (fr < vals[best]) {
      auto expanded = along(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        pts[worst] = std::move(expanded);
        vals[worst] = fe;
      } else {
        pts[worst] = std::move(reflected);
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = std::move(reflected);
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    auto contracted = along(outside ? -0.5 : 0.5);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = std::move(contracted);
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      vals[i] = eval(pts[i]);
    }
  }
  const auto it = std::min_element(vals.begin(), vals.end());
  const auto idx = static_cast<std::size_t>(it - vals.begin());
  return NelderMeadResult{pts[idx], vals[idx], iter, evaluations, converged};
}

}  // namespace coulab
