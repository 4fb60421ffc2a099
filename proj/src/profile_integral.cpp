#include "profile_integral.hpp"

namespace coulab::detail {

QuadResult profile_integral(const RadialProfile& profile, const std::function<double(double)>& integrand,
                            const QuadratureSpec& quad, double origin_exponent,
                            std::vector<double> extra_breaks) {
  if (profile.is_zero()) return {};
  IntegralOptions opts;
  opts.breakpoints = std::move(extra_breaks);
  for (double k : profile.kinks()) opts.breakpoints.push_back(k);
  for (double a : profile.scales()) {
    for (double f : {0.5, 1.0, 2.0, 4.0}) opts.breakpoints.push_back(f * a);
  }
  const double lo = profile.support_begin();
  const double hi = profile.compact() ? profile.support_end() : kInf;
  if (lo == 0.0) opts.lo_singularity = origin_exponent;
  return radial_integral(integrand, lo, hi, quad, opts);
}

}  // namespace coulab::detail
