#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <boost/rational.hpp>

#include "coulab/error.hpp"

namespace coulab {

using Rational = boost::rational<std::int64_t>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return boost::rational_cast<double>(x); }

// Exact value of a decimal or fraction string ("0.75", "3/4", "-2", "1e-1").
// Returns nullopt when the text is not a terminating decimal or fraction that
// fits in 64-bit integers.
std::optional<Rational> parse_rational(const std::string& text);
std::string format_rational(const Rational& x);

// theta = (6 - 5p) / (3 - 2ps - 2p), the interpolation exponent of the
// Gagliardo-Nirenberg type inequality with the L^{2p} norm on the left.
template <class T>
T theta_gn(const T& p, const T& s) {
  const T den = T(3) - T(2) * p * s - T(2) * p;
  if (den == T(0)) throw InputError("theta is singular: 3 - 2ps - 2p = 0");
  return (T(6) - T(5) * p) / den;
}

enum class GnCase { BelowQuarter, Quarter, Middle, ThreeHalves, AboveThreeHalves };

const char* to_string(GnCase c);

template <class T>
struct ExponentInterval {
  T lo{};
  T hi{};
  bool lo_closed = true;
  bool hi_closed = true;
  bool hi_infinite = false;

  bool contains(const T& p) const {
    if (lo_closed ? p < lo : !(lo < p)) return false;
    if (hi_infinite) return true;
    return hi_closed ? !(hi < p) : p < hi;
  }
};

template <class T>
struct GnRange {
  ExponentInterval<T> interval;
  GnCase case_tag;
};

// Admissible p for the Coulomb-Sobolev interpolation inequality, case by case
// in s. The bounds are (1 + 2s)/(1 + s) and 3/(3 - 2s).
template <class T>
GnRange<T> gn_range(const T& s) {
  require(s > T(0), "s must be positive");
  const T quarter = T(1) / T(4);
  const T three_halves = T(3) / T(2);
  const T low = (T(1) + T(2) * s) / (T(1) + s);
  if (s < quarter) return {{T(3) / (T(3) - T(2) * s), low, true, true, false}, GnCase::BelowQuarter};
  if (s == quarter) return {{low, low, true, true, false}, GnCase::Quarter};
  if (s < three_halves) return {{low, T(3) / (T(3) - T(2) * s), true, true, false}, GnCase::Middle};
  if (s == three_halves) return {{low, T(0), true, false, true}, GnCase::ThreeHalves};
  return {{low, T(0), true, true, true}, GnCase::AboveThreeHalves};
}

template <class T>
void require_radial_range(const T& s) {
  require(T(1) / T(2) < s && s < T(3) / T(2), "s must lie in (1/2, 3/2)");
}

// Lower end (16s + 2)/(6s + 1) of the radial embedding range.
template <class T>
T radial_endpoint(const T& s) {
  require_radial_range(s);
  return (T(16) * s + T(2)) / (T(6) * s + T(1));
}

// Sobolev exponent 6/(3 - 2s).
template <class T>
T sobolev_endpoint(const T& s) {
  require_radial_range(s);
  return T(6) / (T(3) - T(2) * s);
}

// Endpoint (2 + 4s)/(1 + s) without symmetry assumptions.
template <class T>
T nonradial_endpoint(const T& s) {
  require(s > T(0), "s must be positive");
  return (T(2) + T(4) * s) / (T(1) + s);
}

// ((8s + 1)/(6s + 1), 3/(3 - 2s)] in the L^{2p} convention.
template <class T>
ExponentInterval<T> corollary_range(const T& s) {
  require_radial_range(s);
  return {(T(8) * s + T(1)) / (T(6) * s + T(1)), T(3) / (T(3) - T(2) * s), false, true, false};
}

// Exponents (theta, sigma) of the weighted pointwise decay estimate
// |x|^sigma |phi(x)| <= C |phi|_{H^s}^theta |phi|_{L^q_a}^{1 - theta}.
template <class T>
std::pair<T, T> denapoli_exponents(const T& s, const T& q, const T& a, const T& d) {
  require(s > T(1) / T(2), "decay exponents need s > 1/2");
  require(q >= T(1), "q must be at least 1");
  require(d >= T(1), "dimension must be at least 1");
  require(T(1) - d < a && a < d * (q - T(1)), "weight power a must satisfy -(d-1) < a < d(q-1)");
  const T den = T(2) * s * q + T(2) - q;
  if (den == T(0)) throw InputError("decay exponents are singular: 2sq + 2 - q = 0");
  const T theta = T(2) / den;
  const T sigma = (T(2) * a * s + T(2) * d * s - a - T(2) * s) / den;
  return {theta, sigma};
}

// (3s + 1/2)/(4s), the gamma -> 1/2 limit of sigma at q = 2, a = -gamma.
template <class T>
T sigma_limit(const T& s) {
  require(s > T(0), "s must be positive");
  return (T(3) * s + T(1) / T(2)) / (T(4) * s);
}

// pi^{2s} [Gamma((3 - 2s)/4) / Gamma((3 + 2s)/4)]^2 for 0 < s < 3/2.
double pitt_constant(double s);
// The sharp constant of int |x|^{-2s} |phi|^2 <= K |phi|^2_{H^s} under the
// unitary Fourier convention: 2^{-2s} [Gamma((3 - 2s)/4) / Gamma((3 + 2s)/4)]^2.
double pitt_sharp_constant(double s);

struct Coupling {
  double R;
  double S;
  bool exploratory;  // s outside the sharpness range (1/2, 1]
};

// R = eps^{-8s/(6s+1)}, S = eps^{-2/(6s+1)}.
Coupling coupling(double epsilon, double s);

}  // namespace coulab
