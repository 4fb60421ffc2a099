#include "coulab/functionals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <boost/math/tools/minima.hpp>

#include "coulab/error.hpp"
#include "coulab/exponents.hpp"
#include "profile_integral.hpp"
#include "sine_transform.hpp"

namespace coulab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * kPi;

// Gagliardo box quadrature: two Gauss-Legendre orders for the error estimate.
constexpr int kGagliardoLow = 16;
constexpr int kGagliardoHigh = 24;
constexpr int kGradedPanels = 6;

// Newton prefix-sum grid: 512 panels of 8 Gauss points.
constexpr int kNewtonPoints = 8;
constexpr int kNewtonPanels = 512;

constexpr int kDecayGrid = 2048;

QuadResult root_of(const QuadResult& integral, double p) {
  const double v = std::max(integral.value, 0.0);
  if (v == 0.0) return QuadResult{0.0, std::pow(integral.error, 1.0 / p), integral.converged};
  const double n = std::pow(v, 1.0 / p);
  return QuadResult{n, n * integral.error / (p * v), integral.converged};
}

bool convergence(double value, double err, const QuadratureSpec& quad) {
  return err <= std::max(quad.abs_tol, quad.rel_tol * std::abs(value));
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Breaks strictly inside (lo, hi), with lo and hi at the ends.
std::vector<double> clip_breaks(std::vector<double> candidates, double lo, double hi) {
  std::vector<double> out{lo};
  for (double b : candidates) {
    if (b > lo && b < hi) out.push_back(b);
  }
  out.push_back(hi);
  sort_unique(out);
  // Drop slivers that would only add rounding noise.
  std::vector<double> clean{out.front()};
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] - clean.back() > 1e-14 * std::max(1.0, std::abs(hi))) clean.push_back(out[i]);
    else if (i + 1 == out.size()) clean.back() = out[i];
  }
  return clean;
}

// Refine every interval so no panel is longer than max_width.
std::vector<double> refine(const std::vector<double>& breaks, double max_width) {
  std::vector<double> out{breaks.front()};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double len = breaks[i + 1] - breaks[i];
    const int n = std::max(1, static_cast<int>(std::ceil(len / max_width)));
    for (int k = 1; k < n; ++k) out.push_back(breaks[i] + len * k / n);
    out.push_back(breaks[i + 1]);
  }
  return out;
}

// int_X^inf r' (|r' - r|^{-1-2s} - (r' + r)^{-1-2s}) dr' for 0 <= r < X.
double gagliardo_tail_kernel(double r, double X, double s) {
  const double b = 1.0 - 2.0 * s;
  const double x = r / X;
  const double lp = std::log1p(x);
  const double lm = std::log1p(-x);
  double first;
  if (std::abs(b) < 1e-12) {
    first = lp - lm;
  } else {
    first = std::pow(X, b) * (std::expm1(b * lp) - std::expm1(b * lm)) / b;
  }
  const double second = r / (2.0 * s) * (std::pow(X - r, -2.0 * s) + std::pow(X + r, -2.0 * s));
  return first + second;
}

struct GagliardoGeometry {
  double X;            // box edge
  double end;          // support end
  double max_panel;    // longest panel in either variable
  double first_break;  // end of the graded h-interval
  std::vector<double> kinks;
};

GagliardoGeometry gagliardo_geometry(const RadialProfile& profile) {
  GagliardoGeometry g;
  g.kinks = profile.kinks();
  if (profile.compact()) {
    g.end = profile.support_end();
    g.X = 2.0 * g.end;
    g.max_panel = g.X / 16.0;
  } else {
    g.end = profile.support_end();
    g.X = 1.5 * g.end;
    double smallest = g.end;
    for (double a : profile.scales()) smallest = std::min(smallest, a);
    g.max_panel = std::min(g.X / 16.0, 0.25 * smallest);
  }
  std::vector<double> h_breaks;
  for (double k : g.kinks) {
    h_breaks.push_back(k);
    h_breaks.push_back(g.X - k);
    for (double k2 : g.kinks) h_breaks.push_back(std::abs(k - k2));
  }
  h_breaks.push_back(g.end);
  h_breaks.push_back(g.X - g.end);
  const auto b = clip_breaks(h_breaks, 0.0, g.X);
  g.first_break = std::min(b[1], g.max_panel);
  return g;
}

// Box part 2 int_0^X dh int_0^{X-h} F(r, r+h) dr with Gauss-Legendre order n
// in both variables, plus the analytic far-field part.
double gagliardo_integral(const RadialProfile& u, double s, const GagliardoGeometry& g, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double X = g.X;
  const double q = 2.0 / (2.0 - 2.0 * s);

  const auto inner = [&](double h) {
    std::vector<double> cand{g.end, g.end - h};
    for (double k : g.kinks) {
      cand.push_back(k);
      cand.push_back(k - h);
    }
    const auto breaks = refine(clip_breaks(cand, 0.0, X - h), g.max_panel);
    if (h <= 0.0) return 0.0;
    // r (r+h) d^2 [h^{-1-2s} - (2r+h)^{-1-2s}] written with d/h to avoid
    // overflow and cancellation at tiny h.
    const double hk = std::pow(h, 1.0 - 2.0 * s);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      const double a = breaks[i];
      const double b = breaks[i + 1];
      const double len = b - a;
      if (u.compact()) {
        const double t1 = a + len / 3.0;
        const double t2 = a + 2.0 * len / 3.0;
        if (u(t1) == 0.0 && u(t2) == 0.0 && u(t1 + h) == 0.0 && u(t2 + h) == 0.0) continue;
      }
      const double c = 0.5 * (a + b);
      const double half = 0.5 * len;
      double panel = 0.0;
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double r = c + half * rule.nodes[k];
        const double slope = u.increment(r, h) / h;
        panel += rule.weights[k] * r * (r + h) * slope * slope * (hk - h * h * std::pow(2.0 * r + h, -1.0 - 2.0 * s));
      }
      sum += half * panel;
    }
    return sum;
  };

  double box = 0.0;
  // Graded interval h = h1 t^q resolves the h^{1-2s} behaviour at the diagonal.
  const double h1 = g.first_break;
  for (int p = 0; p < kGradedPanels; ++p) {
    const double t0 = static_cast<double>(p) / kGradedPanels;
    const double t1 = static_cast<double>(p + 1) / kGradedPanels;
    const double c = 0.5 * (t0 + t1);
    const double half = 0.5 * (t1 - t0);
    double panel = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double t = c + half * rule.nodes[k];
      const double h = h1 * std::pow(t, q);
      panel += rule.weights[k] * inner(h) * h1 * q * std::pow(t, q - 1.0);
    }
    box += half * panel;
  }

  std::vector<double> h_cand;
  for (double k : g.kinks) {
    h_cand.push_back(k);
    h_cand.push_back(X - k);
    for (double k2 : g.kinks) h_cand.push_back(std::abs(k - k2));
  }
  h_cand.push_back(g.end);
  h_cand.push_back(X - g.end);
  const auto h_breaks = refine(clip_breaks(h_cand, h1, X), g.max_panel);
  for (std::size_t i = 0; i + 1 < h_breaks.size(); ++i) {
    const double c = 0.5 * (h_breaks[i] + h_breaks[i + 1]);
    const double half = 0.5 * (h_breaks[i + 1] - h_breaks[i]);
    double panel = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) panel += rule.weights[k] * inner(c + half * rule.nodes[k]);
    box += half * panel;
  }

  // Pairs with one point beyond X, where u vanishes.
  std::vector<double> r_cand = g.kinks;
  const auto r_breaks = refine(clip_breaks(r_cand, 0.0, g.end), g.max_panel);
  double tail = 0.0;
  for (std::size_t i = 0; i + 1 < r_breaks.size(); ++i) {
    const double c = 0.5 * (r_breaks[i] + r_breaks[i + 1]);
    const double half = 0.5 * (r_breaks[i + 1] - r_breaks[i]);
    double panel = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double r = c + half * rule.nodes[k];
      const double v = u(r);
      panel += rule.weights[k] * r * v * v * gagliardo_tail_kernel(r, X, s);
    }
    tail += half * panel;
  }
  return 2.0 * box + 2.0 * tail;
}

// Integration matrix W[k][j] = int_{-1}^{x_k} l_j(x) dx for the Lagrange basis
// on the Gauss nodes; it gives partial integrals at the nodes of a panel.
using NewtonMatrix = std::array<std::array<double, kNewtonPoints>, kNewtonPoints>;

const NewtonMatrix& newton_matrix() {
  static const NewtonMatrix w = [] {
    NewtonMatrix m{};
    const GaussRule& rule = gauss_legendre(kNewtonPoints);
    const auto& x = rule.nodes;
    for (int k = 0; k < kNewtonPoints; ++k) {
      const double half = 0.5 * (x[k] + 1.0);
      const double c = 0.5 * (x[k] - 1.0);
      for (int j = 0; j < kNewtonPoints; ++j) {
        double sum = 0.0;
        for (int i = 0; i < kNewtonPoints; ++i) {
          const double t = c + half * x[i];
          double l = 1.0;
          for (int m2 = 0; m2 < kNewtonPoints; ++m2) {
            if (m2 != j) l *= (t - x[m2]) / (x[j] - x[m2]);
          }
          sum += rule.weights[i] * l;
        }
        m[k][j] = half * sum;
      }
    }
    return m;
  }();
  return w;
}

std::vector<double> newton_edges(const RadialProfile& profile, int panels) {
  const double lo = profile.support_begin();
  const double hi = profile.support_end();
  std::vector<double> cand = profile.kinks();
  for (double a : profile.scales()) {
    for (double f : {0.25, 0.5, 1.0, 2.0, 4.0}) cand.push_back(f * a);
  }
  const auto breaks = clip_breaks(cand, lo, hi);
  const std::size_t intervals = breaks.size() - 1;
  std::vector<int> count(intervals, 2);
  int left = panels - 2 * static_cast<int>(intervals);
  if (left > 0) {
    const double total = hi - lo;
    std::vector<std::pair<double, std::size_t>> remainders;
    int used = 0;
    for (std::size_t i = 0; i < intervals; ++i) {
      const double share = left * (breaks[i + 1] - breaks[i]) / total;
      const int whole = static_cast<int>(std::floor(share));
      count[i] += whole;
      used += whole;
      remainders.push_back({share - whole, i});
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (int k = 0; k < left - used; ++k) ++count[remainders[static_cast<std::size_t>(k) % intervals].second];
  }
  std::vector<double> edges{breaks.front()};
  for (std::size_t i = 0; i < intervals; ++i) {
    const double len = breaks[i + 1] - breaks[i];
    for (int k = 1; k < count[i]; ++k) edges.push_back(breaks[i] + len * k / count[i]);
    edges.push_back(breaks[i + 1]);
  }
  return edges;
}

// D = 2 (4 pi)^2 int r f(r) A(r) dr with A(r) = int_0^r t^2 f(t) dt, f = phi^2.
double newton_sum(const RadialProfile& profile, int panels) {
  const auto edges = newton_edges(profile, panels);
  const GaussRule& rule = gauss_legendre(kNewtonPoints);
  const NewtonMatrix& w = newton_matrix();
  double prefix = 0.0;
  double total = 0.0;
  std::array<double, kNewtonPoints> r{}, f{}, m{};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double half = 0.5 * (edges[i + 1] - edges[i]);
    const double c = 0.5 * (edges[i + 1] + edges[i]);
    for (int k = 0; k < kNewtonPoints; ++k) {
      r[k] = c + half * rule.nodes[k];
      const double v = profile(r[k]);
      f[k] = v * v;
      m[k] = r[k] * r[k] * f[k];
    }
    double panel = 0.0;
    double mass = 0.0;
    for (int k = 0; k < kNewtonPoints; ++k) {
      double partial = 0.0;
      for (int j = 0; j < kNewtonPoints; ++j) partial += w[k][j] * m[j];
      panel += rule.weights[k] * r[k] * f[k] * (prefix + half * partial);
      mass += rule.weights[k] * m[k];
    }
    total += half * panel;
    prefix += half * mass;
  }
  return 2.0 * kFourPi * kFourPi * total;
}

}  // namespace

double relative_gap(double x, double y) {
  const double m = std::max(std::abs(x), std::abs(y));
  return m == 0.0 ? 0.0 : std::abs(x - y) / m;
}

QuadResult lp_norm(const RadialProfile& profile, double p, const QuadratureSpec& quad) {
  require(std::isfinite(p) && p >= 1.0, "Lp norm needs p >= 1");
  quad.validate();
  const auto integral = detail::profile_integral(
      profile, [&](double r) { return kFourPi * r * r * std::pow(std::abs(profile(r)), p); }, quad);
  return root_of(integral, p);
}

QuadResult weighted_lq_norm(const RadialProfile& profile, double q, double a, const QuadratureSpec& quad) {
  require(std::isfinite(q) && q >= 1.0, "weighted norm needs q >= 1");
  require(std::isfinite(a) && a > -3.0, "weighted norm needs a > -3");
  quad.validate();
  const auto integral = detail::profile_integral(
      profile, [&](double r) { return kFourPi * std::pow(r, 2.0 + a) * std::pow(std::abs(profile(r)), q); }, quad,
      a == 0.0 ? 0.0 : 2.0 + a);
  return root_of(integral, q);
}

QuadResult sobolev_spectral(const RadialProfile& profile, double s, const QuadratureSpec& quad) {
  require(std::isfinite(s) && s > 0.0 && s < 1.5, "spectral Sobolev norm needs 0 < s < 3/2");
  quad.validate();
  const auto t = detail::SineTransform::of_profile(profile);
  return root_of(detail::spectral_energy(t, 2.0 * s, kFourPi, quad), 2.0);
}

double gagliardo_constant(double s) {
  require(s > 0.0 && s < 1.0, "Gagliardo constant needs 0 < s < 1");
  return std::pow(2.0, 2.0 * s - 1.0) * std::pow(kPi, -1.5) * std::tgamma(1.5 + s) / std::abs(std::tgamma(-s));
}

QuadResult sobolev_gagliardo(const RadialProfile& profile, double s, const QuadratureSpec& quad) {
  require(std::isfinite(s) && s > 0.0 && s < 1.0, "Gagliardo form needs 0 < s < 1 (use dirichlet_energy at s = 1)");
  quad.validate();
  if (profile.is_zero()) return {};
  const auto geometry = gagliardo_geometry(profile);
  const double hi = gagliardo_integral(profile, s, geometry, kGagliardoHigh);
  const double lo = gagliardo_integral(profile, s, geometry, kGagliardoLow);
  if (!std::isfinite(hi)) throw NumericError("non-finite Gagliardo integral");
  const double c = gagliardo_constant(s) * 8.0 * kPi * kPi / (1.0 + 2.0 * s);
  const double value = c * hi;
  const double err = c * std::abs(hi - lo);
  return root_of(QuadResult{value, err, convergence(value, err, quad)}, 2.0);
}

QuadResult dirichlet_energy(const RadialProfile& profile, const QuadratureSpec& quad) {
  quad.validate();
  const auto integral = detail::profile_integral(
      profile,
      [&](double r) {
        const double d = profile.derivative(r);
        return kFourPi * r * r * d * d;
      },
      quad);
  return root_of(integral, 2.0);
}

QuadResult coulomb_newton(const RadialProfile& profile, const QuadratureSpec& quad) {
  quad.validate();
  if (profile.is_zero()) return {};
  const double fine = newton_sum(profile, kNewtonPanels);
  const double coarse = newton_sum(profile, kNewtonPanels / 2);
  if (!std::isfinite(fine)) throw NumericError("non-finite Coulomb energy");
  const double err = std::abs(fine - coarse);
  return QuadResult{fine, err, convergence(fine, err, quad)};
}

QuadResult coulomb_spectral(const RadialProfile& profile, const QuadratureSpec& quad) {
  quad.validate();
  const auto t = detail::SineTransform::of_density(profile);
  return detail::spectral_energy(t, -2.0, 16.0 * kPi * kPi, quad);
}

QuadResult energy_norm(const RadialProfile& profile, double s, const QuadratureSpec& quad) {
  const QuadResult hs = sobolev_spectral(profile, s, quad);
  const QuadResult d = coulomb_newton(profile, quad);
  const double root_d = std::sqrt(d.value);
  const double sq = hs.value * hs.value + root_d;
  const double sq_err = 2.0 * hs.value * hs.error + (root_d > 0.0 ? 0.5 * d.error / root_d : 0.0);
  return root_of(QuadResult{sq, sq_err, hs.converged && d.converged}, 2.0);
}

QuadResult ruiz_functional(const RadialProfile& profile, double alpha, const QuadratureSpec& quad) {
  require(std::isfinite(alpha) && alpha > 0.5, "Ruiz functional needs alpha > 1/2");
  quad.validate();
  return detail::profile_integral(
      profile,
      [&](double r) {
        const double v = profile(r);
        return kFourPi * std::pow(r, 1.5) * v * v * std::pow(1.0 + std::abs(std::log(r)), -alpha);
      },
      quad, 1.5, {1.0});
}

QuadResult hardy_weight_integral(const RadialProfile& profile, double gamma, const QuadratureSpec& quad) {
  require(std::isfinite(gamma) && gamma > 0.0 && gamma < 3.0, "Hardy weight needs 0 < gamma < 3");
  quad.validate();
  return detail::profile_integral(
      profile,
      [&](double r) {
        const double v = profile(r);
        return kFourPi * std::pow(r, 2.0 - gamma) * v * v;
      },
      quad, 2.0 - gamma);
}

QuadResult pointwise_decay_ratio(const RadialProfile& profile, double s, double q, double a,
                                 const QuadratureSpec& quad) {
  require(std::isfinite(s) && s > 0.5 && s < 1.5, "decay ratio needs 1/2 < s < 3/2");
  require(std::isfinite(q) && q >= 1.0, "decay ratio needs q >= 1");
  require(std::isfinite(a) && a > -2.0 && a < 3.0 * (q - 1.0), "decay ratio needs -2 < a < 3(q - 1)");
  quad.validate();
  if (profile.is_zero()) return {};
  const auto [theta, sigma] = denapoli_exponents(s, q, a, 3.0);

  const auto weighted = [&, sigma = sigma](double r) { return std::pow(r, sigma) * std::abs(profile(r)); };
  const double end = profile.support_end();
  const double begin = profile.support_begin();
  const double lo = begin > 0.0 ? begin / 10.0 : end * 1e-4;
  const double hi = 10.0 * end;
  std::vector<double> grid(kDecayGrid);
  const double step = std::log(hi / lo) / (kDecayGrid - 1);
  for (int i = 0; i < kDecayGrid; ++i) grid[i] = lo * std::exp(step * i);
  double best = 0.0;
  int best_i = 0;
  for (int i = 0; i < kDecayGrid; ++i) {
    const double v = weighted(grid[i]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // Polish between the neighbours of the best grid point.
  const double a0 = grid[std::max(best_i - 1, 0)];
  const double b0 = grid[std::min(best_i + 1, kDecayGrid - 1)];
  const auto polished = boost::math::tools::brent_find_minima([&](double r) { return -weighted(r); }, a0, b0, 50);
  best = std::max(best, -polished.second);
  for (double k : profile.kinks()) best = std::max(best, weighted(k));

  const QuadResult hs = sobolev_spectral(profile, s, quad);
  const QuadResult lq = weighted_lq_norm(profile, q, a, quad);
  const double den = std::pow(hs.value, theta) * std::pow(lq.value, 1.0 - theta);
  const double ratio = best / den;
  const double err = ratio * (theta * hs.error / hs.value + (1.0 - theta) * lq.error / lq.value);
  return QuadResult{ratio, err, hs.converged && lq.converged};
}

double FunctionalReport::coulomb_delta() const {
  return relative_gap(coulomb_newton.value, coulomb_spectral.value);
}

std::optional<double> FunctionalReport::hs_delta() const {
  if (hs_gagliardo) return relative_gap(hs_spectral.value, hs_gagliardo->value);
  if (dirichlet) return relative_gap(hs_spectral.value, dirichlet->value);
  return std::nullopt;
}

bool FunctionalReport::all_converged() const {
  bool ok = hs_spectral.converged && coulomb_newton.converged && coulomb_spectral.converged && energy_norm.converged;
  for (const auto& [p, v] : lp) ok = ok && v.converged;
  if (hs_gagliardo) ok = ok && hs_gagliardo->converged;
  if (dirichlet) ok = ok && dirichlet->converged;
  return ok;
}

nlohmann::ordered_json FunctionalReport::to_json() const {
  nlohmann::ordered_json j;
  j["profile_id"] = profile_id;
  j["s"] = s;
  const auto put = [&j](const std::string& key, const QuadResult& r) {
    j[key] = r.value;
    j[key + "_err"] = !r.converged;
  };
  for (const auto& [p, v] : lp) {
    char key[48];
    std::snprintf(key, sizeof key, "lp[%g]", p);
    put(key, v);
  }
  put("hs_spectral", hs_spectral);
  if (hs_gagliardo) put("hs_gagliardo", *hs_gagliardo);
  if (dirichlet) put("dirichlet", *dirichlet);
  put("coulomb_newton", coulomb_newton);
  put("coulomb_spectral", coulomb_spectral);
  put("energy_norm", energy_norm);
  j["coulomb_delta"] = coulomb_delta();
  if (const auto d = hs_delta()) j["hs_delta"] = *d;
  return j;
}

FunctionalReport functional_report(const RadialProfile& profile, const std::string& profile_id, double s,
                                   const std::vector<double>& ps, const QuadratureSpec& quad) {
  require(std::isfinite(s) && s > 0.0 && s < 1.5, "report needs 0 < s < 3/2");
  FunctionalReport rep;
  rep.profile_id = profile_id;
  rep.s = s;
  for (double p : ps) rep.lp[p] = lp_norm(profile, p, quad);
  rep.hs_spectral = sobolev_spectral(profile, s, quad);
  if (s < 1.0) rep.hs_gagliardo = sobolev_gagliardo(profile, s, quad);
  if (s == 1.0) rep.dirichlet = dirichlet_energy(profile, quad);
  rep.coulomb_newton = coulomb_newton(profile, quad);
  rep.coulomb_spectral = coulomb_spectral(profile, quad);
  const double root_d = std::sqrt(rep.coulomb_newton.value);
  const double sq = rep.hs_spectral.value * rep.hs_spectral.value + root_d;
  const double sq_err =
      2.0 * rep.hs_spectral.value * rep.hs_spectral.error + (root_d > 0.0 ? 0.5 * rep.coulomb_newton.error / root_d : 0.0);
  rep.energy_norm = root_of(QuadResult{sq, sq_err, rep.hs_spectral.converged && rep.coulomb_newton.converged}, 2.0);
  return rep;
}

}  // namespace coulab
