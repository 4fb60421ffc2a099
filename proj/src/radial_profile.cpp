#include "coulab/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coulab/error.hpp"

namespace coulab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool finite_all(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

// Index i with knots[i] <= r < knots[i+1]; caller guarantees knots[0] <= r < knots.back().
std::size_t segment_of(const std::vector<double>& knots, double r) {
  auto it = std::upper_bound(knots.begin(), knots.end(), r);
  return static_cast<std::size_t>(it - knots.begin()) - 1;
}

}  // namespace

RadialProfile RadialProfile::tent(double epsilon, double R, double S) {
  require(std::isfinite(epsilon) && std::isfinite(R) && std::isfinite(S), "tent parameters must be finite");
  require(epsilon > 0.0, "tent amplitude epsilon must be positive");
  require(S > 0.0, "tent half-width S must be positive");
  require(R > S, "tent requires R > S so the support stays away from the origin");
  return RadialProfile(Tent{epsilon, R, S});
}

RadialProfile RadialProfile::gaussian_mixture(std::vector<double> coeffs, std::vector<double> widths) {
  require(!coeffs.empty(), "gaussian mixture needs at least one component");
  require(coeffs.size() == widths.size(), "gaussian mixture coeffs and widths differ in length");
  require(finite_all(coeffs) && finite_all(widths), "gaussian mixture parameters must be finite");
  require(std::all_of(widths.begin(), widths.end(), [](double a) { return a > 0.0; }),
          "gaussian mixture widths must be positive");
  return RadialProfile(GaussianMixture{std::move(coeffs), std::move(widths)});
}

RadialProfile RadialProfile::piecewise_linear(std::vector<double> knots, std::vector<double> values) {
  require(!knots.empty(), "piecewise-linear profile needs at least one knot");
  require(knots.size() == values.size(), "piecewise-linear knots and values differ in length");
  require(finite_all(knots) && finite_all(values), "piecewise-linear data must be finite");
  require(knots.front() >= 0.0, "piecewise-linear knots must be non-negative");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    require(knots[i] > knots[i - 1], "piecewise-linear knots must be strictly increasing");
  }
  require(values.back() == 0.0,
          "piecewise-linear profile must end at value 0 (profiles are continuous)");
  return RadialProfile(PiecewiseLinear{std::move(knots), std::move(values)});
}

RadialProfile RadialProfile::zero() { return RadialProfile(GaussianMixture{{0.0}, {1.0}}); }

RadialProfile RadialProfile::ball(double ramp_width) {
  require(ramp_width > 0.0 && ramp_width < 1.0, "ball ramp width must lie in (0, 1)");
  return piecewise_linear({1.0 - 0.5 * ramp_width, 1.0 + 0.5 * ramp_width}, {1.0, 0.0});
}

RadialProfile make_tent(double epsilon, double R, double S) { return RadialProfile::tent(epsilon, R, S); }

bool RadialProfile::is_zero() const {
  return std::visit(
      Overloaded{
          [](const Tent&) { return false; },
          [](const GaussianMixture& g) {
            return std::all_of(g.coeffs.begin(), g.coeffs.end(), [](double c) { return c == 0.0; });
          },
          [](const PiecewiseLinear& p) {
            return std::all_of(p.values.begin(), p.values.end(), [](double v) { return v == 0.0; });
          },
      },
      kind_);
}

double RadialProfile::operator()(double r) const {
  return std::visit(
      Overloaded{
          [r](const Tent& t) {
            const double d = std::abs(r - t.R);
            return d < t.S ? t.epsilon * (t.S - d) / t.S : 0.0;
          },
          [r](const GaussianMixture& g) {
            double sum = 0.0;
            for (std::size_t i = 0; i < g.coeffs.size(); ++i) sum += g.coeffs[i] * std::exp(-g.widths[i] * r * r);
            return sum;
          },
          [r](const PiecewiseLinear& p) {
            if (r <= p.knots.front()) return p.values.front();
            if (r >= p.knots.back()) return 0.0;
            const std::size_t i = segment_of(p.knots, r);
            const double w = (r - p.knots[i]) / (p.knots[i + 1] - p.knots[i]);
            return p.values[i] + w * (p.values[i + 1] - p.values[i]);
          },
      },
      kind_);
}

double RadialProfile::derivative(double r) const {
  return std::visit(
      Overloaded{
          [r](const Tent& t) {
            if (r < t.R - t.S || r > t.R + t.S) return 0.0;
            if (r == t.R + t.S) return -t.epsilon / t.S;
            return r < t.R ? t.epsilon / t.S : -t.epsilon / t.S;
          },
          [r](const GaussianMixture& g) {
            double sum = 0.0;
            for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
              sum += -2.0 * g.widths[i] * r * g.coeffs[i] * std::exp(-g.widths[i] * r * r);
            }
            return sum;
          },
          [r](const PiecewiseLinear& p) {
            if (r < p.knots.front() || r > p.knots.back() || p.knots.size() < 2) return 0.0;
            const std::size_t i = r == p.knots.back() ? p.knots.size() - 2 : segment_of(p.knots, r);
            return (p.values[i + 1] - p.values[i]) / (p.knots[i + 1] - p.knots[i]);
          },
      },
      kind_);
}

double RadialProfile::increment(double r, double h) const {
  if (const auto* g = std::get_if<GaussianMixture>(&kind_)) {
    double sum = 0.0;
    for (std::size_t i = 0; i < g->coeffs.size(); ++i) {
      sum += g->coeffs[i] * std::exp(-g->widths[i] * r * r) * std::expm1(-g->widths[i] * h * (2.0 * r + h));
    }
    return sum;
  }
  const std::vector<double> k = kinks();
  const auto next = std::upper_bound(k.begin(), k.end(), r);
  if (next == k.end()) return 0.0;
  if (*next >= r + h) return derivative(r) * h;  // r and r + h share a linear segment
  return (*this)(r + h) - (*this)(r);
}

std::vector<double> RadialProfile::kinks() const {
  return std::visit(
      Overloaded{
          [](const Tent& t) { return std::vector<double>{t.R - t.S, t.R, t.R + t.S}; },
          [](const GaussianMixture&) { return std::vector<double>{}; },
          [](const PiecewiseLinear& p) {
            std::vector<double> k;
            for (double x : p.knots) {
              if (x > 0.0) k.push_back(x);
            }
            return k;
          },
      },
      kind_);
}

std::vector<double> RadialProfile::scales() const {
  std::vector<double> out;
  if (const auto* g = std::get_if<GaussianMixture>(&kind_)) {
    for (std::size_t i = 0; i < g->widths.size(); ++i) {
      if (g->coeffs[i] != 0.0) out.push_back(1.0 / std::sqrt(g->widths[i]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

double RadialProfile::support_begin() const {
  return std::visit(
      Overloaded{
          [](const Tent& t) { return t.R - t.S; },
          [](const GaussianMixture&) { return 0.0; },
          [](const PiecewiseLinear& p) {
            if (p.values.front() != 0.0) return 0.0;
            for (std::size_t i = 1; i < p.values.size(); ++i) {
              if (p.values[i] != 0.0) return p.knots[i - 1];
            }
            return p.knots.back();
          },
      },
      kind_);
}

double RadialProfile::support_end(double rel) const {
  return std::visit(
      Overloaded{
          [](const Tent& t) { return t.R + t.S; },
          [rel](const GaussianMixture& g) {
            double total = 0.0;
            for (double c : g.coeffs) total += std::abs(c);
            if (total == 0.0) return 0.0;
            double end = 0.0;
            for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
              const double ratio = std::abs(g.coeffs[i]) / (rel * total);
              if (ratio > 1.0) end = std::max(end, std::sqrt(std::log(ratio) / g.widths[i]));
            }
            return end;
          },
          [](const PiecewiseLinear& p) { return p.knots.back(); },
      },
      kind_);
}

double RadialProfile::sup_abs() const {
  return std::visit(
      Overloaded{
          [](const Tent& t) { return t.epsilon; },
          [this](const GaussianMixture& g) {
            double best = 0.0;
            const double end = support_end();
            const int n = 4096;
            for (int i = 0; i <= n; ++i) best = std::max(best, std::abs((*this)(end * i / n)));
            for (double s : scales()) best = std::max(best, std::abs((*this)(s)));
            (void)g;
            return best;
          },
          [](const PiecewiseLinear& p) {
            double best = 0.0;
            for (double v : p.values) best = std::max(best, std::abs(v));
            return best;
          },
      },
      kind_);
}

std::vector<PolyPiece> RadialProfile::pieces() const {
  return std::visit(
      Overloaded{
          [](const Tent& t) {
            const double slope = t.epsilon / t.S;
            return std::vector<PolyPiece>{
                {t.R - t.S, t.R, {0.0, slope}},
                {t.R, t.R + t.S, {t.epsilon, -slope}},
            };
          },
          [](const GaussianMixture&) -> std::vector<PolyPiece> {
            throw InputError("gaussian mixtures have no polynomial pieces");
          },
          [](const PiecewiseLinear& p) {
            std::vector<PolyPiece> out;
            if (p.knots.front() > 0.0 && p.values.front() != 0.0) {
              out.push_back({0.0, p.knots.front(), {p.values.front()}});
            }
            for (std::size_t i = 0; i + 1 < p.knots.size(); ++i) {
              if (p.values[i] == 0.0 && p.values[i + 1] == 0.0) continue;
              const double slope = (p.values[i + 1] - p.values[i]) / (p.knots[i + 1] - p.knots[i]);
              out.push_back({p.knots[i], p.knots[i + 1], {p.values[i], slope}});
            }
            return out;
          },
      },
      kind_);
}

RadialProfile RadialProfile::scaled(double t) const {
  require(std::isfinite(t), "amplitude factor must be finite");
  return std::visit(
      Overloaded{
          [t](const Tent& x) -> RadialProfile {
            if (t > 0.0) return tent(x.epsilon * t, x.R, x.S);
            return piecewise_linear({x.R - x.S, x.R, x.R + x.S}, {0.0, x.epsilon * t, 0.0});
          },
          [t](const GaussianMixture& g) {
            auto c = g.coeffs;
            for (double& v : c) v *= t;
            return gaussian_mixture(std::move(c), g.widths);
          },
          [t](const PiecewiseLinear& p) {
            auto v = p.values;
            for (double& x : v) x *= t;
            return piecewise_linear(p.knots, std::move(v));
          },
      },
      kind_);
}

RadialProfile RadialProfile::dilated(double lambda) const {
  require(lambda > 0.0 && std::isfinite(lambda), "dilation factor must be positive");
  return std::visit(
      Overloaded{
          [lambda](const Tent& x) { return tent(x.epsilon, x.R / lambda, x.S / lambda); },
          [lambda](const GaussianMixture& g) {
            auto w = g.widths;
            for (double& a : w) a *= lambda * lambda;
            return gaussian_mixture(g.coeffs, std::move(w));
          },
          [lambda](const PiecewiseLinear& p) {
            auto k = p.knots;
            for (double& x : k) x /= lambda;
            return piecewise_linear(std::move(k), p.values);
          },
      },
      kind_);
}

double evaluate(const RadialProfile& profile, double r) {
  require(r >= 0.0, "radius must be non-negative");
  return profile(r);
}

}  // namespace coulab
