#include "coulab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include "coulab/error.hpp"

namespace coulab {

void QuadratureSpec::validate() const {
  require(rel_tol > 0.0 && std::isfinite(rel_tol), "quadrature rel_tol must be positive");
  require(abs_tol > 0.0 && std::isfinite(abs_tol), "quadrature abs_tol must be positive");
  require(max_subdiv >= 1, "quadrature max_subdiv must be at least 1");
}

namespace {

// Kronrod-15 nodes on [0, 1] (index 0 is the centre). Even indices are the
// embedded Gauss-7 nodes.
struct KronrodTable {
  std::array<double, 8> x{};
  std::array<double, 8> wk{};
  std::array<double, 4> wg{};
};

const KronrodTable& kronrod() {
  static const KronrodTable table = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    KronrodTable t;
    const auto& ax = gauss_kronrod<double, 15>::abscissa();
    const auto& wk = gauss_kronrod<double, 15>::weights();
    const auto& wg = gauss<double, 7>::weights();
    for (std::size_t i = 0; i < 8; ++i) {
      t.x[i] = ax[i];
      t.wk[i] = wk[i];
    }
    for (std::size_t i = 0; i < 4; ++i) t.wg[i] = wg[i];
    return t;
  }();
  return table;
}

enum class MapKind { Linear, Power, Tail };

// One initial piece of the integration range, integrated in a mapped
// variable u. The adaptive loop subdivides in u.
struct Piece {
  MapKind kind = MapKind::Linear;
  double lo = 0.0;      // physical lower end
  double length = 0.0;  // physical length (Power map only)
  double power = 1.0;   // r = lo + length * u^power
  double u0 = 0.0;
  double u1 = 0.0;
};

struct Segment {
  std::size_t piece;
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

double mapped_integrand(const std::function<double(double)>& f, const Piece& p, double u) {
  switch (p.kind) {
    case MapKind::Linear:
      return f(u);
    case MapKind::Power: {
      const double up = std::pow(u, p.power);
      const double r = p.lo + p.length * up;
      const double jac = p.length * p.power * up / u;
      return f(r) * jac;
    }
    case MapKind::Tail: {
      const double one_minus = 1.0 - u;
      const double r = p.lo + u / one_minus;
      return f(r) / (one_minus * one_minus);
    }
  }
  return 0.0;
}

Segment kronrod_segment(const std::function<double(double)>& f, const Piece& piece,
                        std::size_t index, double a, double b) {
  const auto& k = kronrod();
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fc = mapped_integrand(f, piece, centre);
  double res_k = k.wk[0] * fc;
  double res_g = k.wg[0] * fc;
  double res_abs = std::abs(res_k);
  for (std::size_t i = 1; i < 8; ++i) {
    const double dx = half * k.x[i];
    const double f1 = mapped_integrand(f, piece, centre - dx);
    const double f2 = mapped_integrand(f, piece, centre + dx);
    res_k += k.wk[i] * (f1 + f2);
    res_abs += k.wk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 0) res_g += k.wg[i / 2] * (f1 + f2);
  }
  res_k *= half;
  res_g *= half;
  res_abs *= std::abs(half);
  if (!std::isfinite(res_k)) {
    throw NumericError("non-finite integrand value on [" + std::to_string(a) + ", " +
                       std::to_string(b) + "]");
  }
  const double err = std::max(std::abs(res_k - res_g),
                              50.0 * std::numeric_limits<double>::epsilon() * res_abs);
  return Segment{index, a, b, res_k, err};
}

}  // namespace

QuadResult radial_integral(const std::function<double(double)>& f, double lo, double hi,
                           const QuadratureSpec& quad, const IntegralOptions& options) {
  quad.validate();
  require(std::isfinite(lo), "integration lower limit must be finite");
  require(hi >= lo, "integration interval must satisfy hi >= lo");
  require(options.lo_singularity > -1.0, "endpoint singularity exponent must exceed -1");
  if (hi == lo) return {};

  std::vector<double> cuts{lo};
  for (double b : options.breakpoints) {
    if (b > lo && b < hi && std::isfinite(b)) cuts.push_back(b);
  }
  const bool singular = options.lo_singularity != 0.0;
  if (std::isinf(hi) && (cuts.size() == 1) && singular) cuts.push_back(lo + 1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(hi);

  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    Piece p;
    if (std::isinf(b)) {
      p.kind = MapKind::Tail;
      p.lo = a;
      p.u0 = 0.0;
      p.u1 = 1.0;
    } else if (i == 0 && singular) {
      p.kind = MapKind::Power;
      p.lo = a;
      p.length = b - a;
      p.power = 1.0 / (1.0 + options.lo_singularity);
      p.u0 = 0.0;
      p.u1 = 1.0;
    } else {
      p.u0 = a;
      p.u1 = b;
    }
    pieces.push_back(p);
  }

  std::priority_queue<Segment> heap;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Segment s = kronrod_segment(f, pieces[i], i, pieces[i].u0, pieces[i].u1);
    total += s.value;
    total_err += s.error;
    heap.push(s);
  }

  const auto target = [&] { return std::max(quad.abs_tol, quad.rel_tol * std::abs(total)); };
  int count = static_cast<int>(heap.size());
  while (total_err > target() && count < quad.max_subdiv) {
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);  // interval cannot be split further in double precision
      break;
    }
    Segment left = kronrod_segment(f, pieces[worst.piece], worst.piece, worst.a, mid);
    Segment right = kronrod_segment(f, pieces[worst.piece], worst.piece, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  // Re-sum to shed the drift of the running updates.
  double value = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  const bool converged = err <= std::max(quad.abs_tol, quad.rel_tol * std::abs(value));
  return QuadResult{value, err, converged};
}

const GaussRule& gauss_legendre(int n) {
  require(n >= 1 && n <= 64, "Gauss-Legendre order must be in [1, 64]");
  static const std::vector<GaussRule> rules = [] {
    std::vector<GaussRule> out(65);
    for (int m = 1; m <= 64; ++m) {
      const auto zeros = boost::math::legendre_p_zeros<double>(m);  // non-negative half
      GaussRule rule;
      for (double z : zeros) {
        const double dp = boost::math::legendre_p_prime<double>(m, z);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes.push_back(z);
        rule.weights.push_back(w);
        if (z != 0.0) {
          rule.nodes.push_back(-z);
          rule.weights.push_back(w);
        }
      }
      std::vector<std::size_t> order(rule.nodes.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return rule.nodes[a] < rule.nodes[b]; });
      GaussRule sorted;
      for (std::size_t i : order) {
        sorted.nodes.push_back(rule.nodes[i]);
        sorted.weights.push_back(rule.weights[i]);
      }
      out[m] = std::move(sorted);
    }
    return out;
  }();
  return rules[n];
}

double composite_gauss(const std::function<double(double)>& f, std::span<const double> edges,
                       int points_per_panel) {
  const GaussRule& rule = gauss_legendre(points_per_panel);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double c = 0.5 * (edges[i] + edges[i + 1]);
    const double h = 0.5 * (edges[i + 1] - edges[i]);
    double panel = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) panel += rule.weights[k] * f(c + h * rule.nodes[k]);
    sum += h * panel;
  }
  return sum;
}

}  // namespace coulab
