#pragma once

#include <functional>

#include "coulab/quadrature.hpp"
#include "coulab/radial_profile.hpp"

namespace coulab::detail {

// int_0^inf weight(r) * h(phi(r)) dr where h(0) = 0, so only the support of
// the profile contributes. Kinks and Gaussian scales become breakpoints.
// `origin_exponent` is the power behaviour of the weight at r = 0; it is used
// as a singularity hint when the support reaches the origin.
QuadResult profile_integral(const RadialProfile& profile, const std::function<double(double)>& integrand,
                            const QuadratureSpec& quad, double origin_exponent = 0.0,
                            std::vector<double> extra_breaks = {});

}  // namespace coulab::detail
