#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coulab/quadrature.hpp"
#include "coulab/radial_profile.hpp"

namespace coulab {

struct CheckResult {
  std::string name;
  double measured;
  double bound;
  bool pass;
  std::string relation = "<=";  // how measured is compared with bound
};

// The closed-form fixture family: exp(-r^2/2), tent(1,2,1) and the mixture
// exp(-0.4 r^2) + 0.6 exp(-2.5 r^2).
std::vector<std::pair<std::string, RadialProfile>> fixture_family();

bool known_suite(const std::string& suite);

// Suites: identities, pitt, scaling, lemma-bounds, all. `tol` bounds the
// dual-method agreement checks; the other bounds are fixed.
std::vector<CheckResult> run_verify_suite(const std::string& suite, double tol, const QuadratureSpec& quad);

// Aligned table, one line per check.
std::string format_checks(const std::vector<CheckResult>& checks);

}  // namespace coulab
