#include "coulab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "coulab/error.hpp"

namespace coulab {

namespace {

std::vector<double> number_list(const nlohmann::json& j, const char* key) {
  require(j.contains(key), std::string("profile JSON lacks \"") + key + "\"");
  const auto& v = j.at(key);
  require(v.is_array(), std::string("\"") + key + "\" must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    require(x.is_number(), std::string("\"") + key + "\" must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

double number(const nlohmann::json& j, const char* key) {
  require(j.contains(key) && j.at(key).is_number(), std::string("profile JSON needs a number \"") + key + "\"");
  return j.at(key).get<double>();
}

}  // namespace

RadialProfile profile_from_json(const nlohmann::json& j) {
  require(j.is_object(), "profile JSON must be an object");
  require(j.contains("type") && j.at("type").is_string(), "profile JSON needs a string \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "tent") return RadialProfile::tent(number(j, "epsilon"), number(j, "R"), number(j, "S"));
  if (type == "gaussian_mixture") {
    return RadialProfile::gaussian_mixture(number_list(j, "coeffs"), number_list(j, "widths"));
  }
  if (type == "piecewise_linear") {
    return RadialProfile::piecewise_linear(number_list(j, "knots"), number_list(j, "values"));
  }
  throw InputError("unknown profile type '" + type + "'");
}

nlohmann::ordered_json profile_to_json(const RadialProfile& profile) {
  nlohmann::ordered_json j;
  if (const auto* t = std::get_if<Tent>(&profile.kind())) {
    j["type"] = "tent";
    j["epsilon"] = t->epsilon;
    j["R"] = t->R;
    j["S"] = t->S;
  } else if (const auto* g = std::get_if<GaussianMixture>(&profile.kind())) {
    j["type"] = "gaussian_mixture";
    j["coeffs"] = g->coeffs;
    j["widths"] = g->widths;
  } else {
    const auto& p = std::get<PiecewiseLinear>(profile.kind());
    j["type"] = "piecewise_linear";
    j["knots"] = p.knots;
    j["values"] = p.values;
  }
  return j;
}

RadialProfile load_profile(const std::string& source) {
  if (source == "builtin:gaussian") return RadialProfile::gaussian_mixture({1.0}, {0.5});
  if (source == "builtin:ball") return RadialProfile::ball();
  if (source == "builtin:zero") return RadialProfile::zero();
  require(source.rfind("builtin:", 0) != 0, "unknown builtin profile '" + source + "'");
  std::string text = source;
  if (source.find_first_not_of(" \t\r\n") == std::string::npos || source[source.find_first_not_of(" \t\r\n")] != '{') {
    std::ifstream in(source);
    require(static_cast<bool>(in), "cannot open profile file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed profile JSON: ") + e.what());
  }
  return profile_from_json(j);
}

}  // namespace coulab
