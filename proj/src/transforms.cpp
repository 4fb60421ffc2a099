#include "coulab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coulab/error.hpp"
#include "profile_integral.hpp"
#include "sine_transform.hpp"

namespace coulab {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2OverPi = std::sqrt(2.0 / kPi);
constexpr std::size_t kMaxHalfPeriods = 20000;
constexpr std::size_t kGridPoints = 512;

}  // namespace

SpectralProfile radial_fourier(const RadialProfile& profile, const std::vector<double>& rhos,
                               const QuadratureSpec& quad) {
  quad.validate();
  SpectralProfile out;
  out.rhos = rhos;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    require(std::isfinite(rhos[i]) && rhos[i] > 0.0, "frequencies must be positive");
    if (i > 0) require(rhos[i] > rhos[i - 1], "frequencies must be strictly increasing");
  }
  if (profile.is_zero()) {
    out.values.assign(rhos.size(), 0.0);
    out.converged.assign(rhos.size(), true);
    return out;
  }

  const double lo = profile.support_begin();
  const double hi = profile.compact() ? profile.support_end() : profile.support_end(1e-17);
  const std::vector<double> kinks = profile.kinks();
  const std::vector<double> scales = profile.scales();
  for (double rho : rhos) {
    IntegralOptions opts;
    opts.breakpoints = kinks;
    for (double a : scales) opts.breakpoints.push_back(a);
    // Split at multiples of the half period so each piece holds one lobe.
    const double half_period = kPi / rho;
    const auto first = static_cast<std::size_t>(std::floor(lo / half_period)) + 1;
    const auto last = static_cast<std::size_t>(std::ceil(hi / half_period));
    if (last > first && last - first < kMaxHalfPeriods) {
      for (std::size_t k = first; k < last; ++k) opts.breakpoints.push_back(static_cast<double>(k) * half_period);
    }
    const auto integrand = [&](double r) { return r * std::sin(rho * r) * profile(r); };
    QuadResult q = radial_integral(integrand, lo, hi, quad, opts);
    out.values.push_back(kSqrt2OverPi * q.value / rho);
    out.converged.push_back(q.converged);
  }
  return out;
}

QuadResult radial_fourier_at_zero(const RadialProfile& profile, const QuadratureSpec& quad) {
  QuadResult q = detail::profile_integral(profile, [&](double r) { return r * r * profile(r); }, quad);
  const double c = 4.0 * kPi * std::pow(2.0 * kPi, -1.5);
  q.value *= c;
  q.error *= c;
  return q;
}

Reconstruction inverse_radial_fourier(const SpectralProfile& spectral, const std::vector<double>& rs,
                                      const QuadratureSpec& quad) {
  quad.validate();
  const auto& rhos = spectral.rhos;
  const auto& vals = spectral.values;
  require(rhos.size() == vals.size(), "spectral profile has mismatched rhos and values");
  require(!rhos.empty(), "spectral profile is empty");
  require(spectral.convention_tag == kFourierConvention, "unknown Fourier convention tag");
  require(!rs.empty(), "need at least one radius");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    require(std::isfinite(rs[i]) && rs[i] >= 0.0, "radii must be non-negative");
    if (i > 0) require(rs[i] > rs[i - 1], "radii must be strictly increasing");
  }

  // rho * phi_hat(rho) as polynomial pieces in rho: phi_hat is a cubic
  // Hermite interpolant with three-point slopes, constant on [0, rhos[0]].
  const std::size_t n = rhos.size();
  std::vector<double> slopes(n, 0.0);
  const auto three_point = [&](std::size_t a, std::size_t b, std::size_t c, double at) {
    // Derivative at `at` of the parabola through samples a, b, c.
    const double xa = rhos[a], xb = rhos[b], xc = rhos[c];
    return vals[a] * (2.0 * at - xb - xc) / ((xa - xb) * (xa - xc)) +
           vals[b] * (2.0 * at - xa - xc) / ((xb - xa) * (xb - xc)) +
           vals[c] * (2.0 * at - xa - xb) / ((xc - xa) * (xc - xb));
  };
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t mid = std::clamp<std::size_t>(i, 1, n - 2);
      slopes[i] = three_point(mid - 1, mid, mid + 1, rhos[i]);
    }
  } else if (n == 2) {
    slopes[0] = slopes[1] = (vals[1] - vals[0]) / (rhos[1] - rhos[0]);
  }
  std::vector<PolyPiece> pieces;
  if (rhos.front() > 0.0) pieces.push_back({0.0, rhos.front(), {0.0, vals.front()}});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = rhos[i + 1] - rhos[i];
    require(h > 0.0, "spectral frequencies must be strictly increasing");
    const double secant = (vals[i + 1] - vals[i]) / h;
    const double c2 = (3.0 * secant - 2.0 * slopes[i] - slopes[i + 1]) / h;
    const double c3 = (slopes[i] + slopes[i + 1] - 2.0 * secant) / (h * h);
    pieces.push_back({rhos[i], rhos[i + 1], detail::poly_mul({rhos[i], 1.0}, {vals[i], slopes[i], c2, c3})});
  }
  std::vector<detail::PreparedPiece> prepared;
  for (const PolyPiece& p : pieces) prepared.push_back(detail::prepare(p));

  std::vector<double> samples;
  for (double r : rs) {
    double sum = 0.0;
    if (r == 0.0) {
      // sin(rho r)/r -> rho: integrate rho^2 phi_hat exactly.
      for (const PolyPiece& p : pieces) {
        const auto c = detail::poly_mul({p.lo, 1.0}, p.c);
        const GaussRule& rule = gauss_legendre(4);  // exact for the quintic rho^2 phi_hat
        const double half = 0.5 * (p.hi - p.lo);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
          sum += half * rule.weights[k] * detail::poly_eval(c, half * (1.0 + rule.nodes[k]));
        }
      }
    } else {
      for (const auto& p : prepared) sum += detail::piece_sine_integral(p, r);
      sum /= r;
    }
    samples.push_back(kSqrt2OverPi * sum);
  }

  double peak = 0.0;
  for (double v : vals) peak = std::max(peak, std::abs(v));
  // The spectrum must have decayed over the top tenth of the sampled range.
  double tail = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rhos[i] >= 0.9 * rhos.back()) tail = std::max(tail, rhos[i] * std::abs(vals[i]));
  }
  const bool covered = tail <= std::max(quad.abs_tol, std::sqrt(quad.rel_tol) * peak);

  std::vector<double> knots = rs;
  std::vector<double> values = samples;
  const double step = rs.size() > 1 ? rs.back() - rs[rs.size() - 2] : std::max(rs.back(), 1.0);
  knots.push_back(rs.back() + step);
  values.push_back(0.0);
  return Reconstruction{RadialProfile::piecewise_linear(std::move(knots), std::move(values)), std::move(samples),
                        covered};
}

PlancherelResult plancherel_check(const RadialProfile& profile, const QuadratureSpec& quad) {
  quad.validate();
  QuadResult direct =
      detail::profile_integral(profile, [&](double r) { const double v = profile(r); return 4.0 * kPi * r * r * v * v; },
                               quad);
  QuadResult spectral = detail::spectral_energy(detail::SineTransform::of_profile(profile), 0.0, 4.0 * kPi, quad);
  const auto to_norm = [](QuadResult q) {
    const double n = std::sqrt(std::max(q.value, 0.0));
    return QuadResult{n, n > 0.0 ? 0.5 * q.error / n : std::sqrt(q.error), q.converged};
  };
  return PlancherelResult{to_norm(direct), to_norm(spectral)};
}

std::vector<double> default_spectral_grid(const RadialProfile& profile, const QuadratureSpec& quad, double s) {
  quad.validate();
  require(s > 0.0 && s < 1.5, "smoothness order must lie in (0, 3/2)");
  const auto transform = detail::SineTransform::of_profile(profile);
  const auto integrand = [&](double rho) {
    const double g = transform(rho);
    return 4.0 * kPi * std::pow(rho, 2.0 * s) * g * g;
  };
  double rho_max = 1.0;
  if (profile.is_zero()) {
    rho_max = 1.0;
  } else if (profile.is_gaussian_mixture()) {
    // exp(-a r^2) transforms to a Gaussian of frequency scale 2 sqrt(a).
    double widest = 0.0;
    for (double radius : profile.scales()) widest = std::max(widest, 2.0 / radius);
    rho_max = std::max(1.0, widest);
    while (rho_max < 1e6 &&
           (integrand(rho_max) > quad.abs_tol || integrand(1.1 * rho_max) > quad.abs_tol ||
            integrand(1.2 * rho_max) > quad.abs_tol)) {
      rho_max *= 1.25;
    }
  } else {
    // |G| <= sqrt(2/pi) * sum|jump g'| / rho^2 beyond the oscillatory regime.
    const double bound = 8.0 * static_cast<double>(profile.kinks().size()) * transform.kink_energy();
    rho_max = std::pow(bound / quad.abs_tol, 1.0 / (4.0 - 2.0 * s));
    rho_max = std::clamp(rho_max, 10.0, 1e7);
  }
  std::vector<double> grid(kGridPoints);
  const double lo = 1e-3;
  const double ratio = std::log(rho_max / lo) / static_cast<double>(kGridPoints - 1);
  for (std::size_t i = 0; i < kGridPoints; ++i) grid[i] = lo * std::exp(ratio * static_cast<double>(i));
  return grid;
}

}  // namespace coulab
