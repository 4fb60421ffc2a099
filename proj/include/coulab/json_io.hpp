#pragma once

#include <string>

#include "json.hpp"

#include "coulab/radial_profile.hpp"

namespace coulab {

// {"type":"tent","epsilon":..,"R":..,"S":..}
// {"type":"gaussian_mixture","coeffs":[..],"widths":[..]}
// {"type":"piecewise_linear","knots":[..],"values":[..]}
RadialProfile profile_from_json(const nlohmann::json& j);
nlohmann::ordered_json profile_to_json(const RadialProfile& profile);

// "builtin:gaussian" (exp(-r^2/2)), "builtin:ball", "builtin:zero", inline
// JSON text starting with '{', or a path to a JSON file.
RadialProfile load_profile(const std::string& source);

}  // namespace coulab
