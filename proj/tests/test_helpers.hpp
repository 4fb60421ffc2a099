#pragma once

#include <cmath>

#include "coulab/quadrature.hpp"
#include "coulab/radial_profile.hpp"

namespace testing {

inline double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(x), std::abs(y)); }

inline coulab::RadialProfile gauss() { return coulab::RadialProfile::gaussian_mixture({1.0}, {0.5}); }
inline coulab::RadialProfile tent() { return coulab::RadialProfile::tent(1.0, 2.0, 1.0); }
inline coulab::RadialProfile mix() { return coulab::RadialProfile::gaussian_mixture({1.0, 0.6}, {0.4, 2.5}); }

inline const coulab::QuadratureSpec quad{};

}  // namespace testing
