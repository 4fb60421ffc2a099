#include "coulab/exponents.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <regex>
#include <sstream>

#include "coulab/exponent_set.hpp"

namespace coulab {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::optional<std::int64_t> parse_int(const std::string& digits) {
  if (digits.empty()) return 0;
  std::int64_t v = 0;
  for (char c : digits) {
    const int d = c - '0';
    if (v > (kMax - d) / 10) return std::nullopt;
    v = v * 10 + d;
  }
  return v;
}

std::optional<std::int64_t> pow10(int n) {
  std::int64_t v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > kMax / 10) return std::nullopt;
    v *= 10;
  }
  return v;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

const char* to_string(GnCase c) {
  switch (c) {
    case GnCase::BelowQuarter:
      return "0 < s < 1/4";
    case GnCase::Quarter:
      return "s = 1/4";
    case GnCase::Middle:
      return "1/4 < s < 3/2";
    case GnCase::ThreeHalves:
      return "s = 3/2";
    case GnCase::AboveThreeHalves:
      return "s > 3/2";
  }
  return "";
}

std::optional<Rational> parse_rational(const std::string& text) {
  static const std::regex fraction(R"(\s*([+-]?)(\d+)\s*/\s*(\d+)\s*)");
  static const std::regex decimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::smatch m;
  try {
    if (std::regex_match(text, m, fraction)) {
      const auto num = parse_int(m[2]);
      const auto den = parse_int(m[3]);
      if (!num || !den || *den == 0) return std::nullopt;
      Rational r(*num, *den);
      return m[1] == "-" ? -r : r;
    }
    if (!std::regex_match(text, m, decimal)) return std::nullopt;
    const std::string whole = m[2];
    const std::string frac = m[3];
    if (whole.empty() && frac.empty()) return std::nullopt;
    const auto mantissa = parse_int(whole + frac);
    if (!mantissa) return std::nullopt;
    int exponent = -static_cast<int>(frac.size());
    if (m[4].matched) exponent += std::stoi(m[4]);
    if (std::abs(exponent) > 18) return std::nullopt;
    const auto scale = pow10(std::abs(exponent));
    if (!scale) return std::nullopt;
    Rational r = exponent >= 0 ? Rational(*mantissa) * *scale : Rational(*mantissa, *scale);
    return m[1] == "-" ? -r : r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string format_rational(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

double pitt_constant(double s) {
  require(s > 0.0 && s < 1.5, "Pitt constant needs 0 < s < 3/2");
  const double ratio = std::tgamma((3.0 - 2.0 * s) / 4.0) / std::tgamma((3.0 + 2.0 * s) / 4.0);
  return std::pow(std::numbers::pi, 2.0 * s) * ratio * ratio;
}

double pitt_sharp_constant(double s) {
  require(s > 0.0 && s < 1.5, "Pitt constant needs 0 < s < 3/2");
  const double ratio = std::tgamma((3.0 - 2.0 * s) / 4.0) / std::tgamma((3.0 + 2.0 * s) / 4.0);
  return std::pow(2.0, -2.0 * s) * ratio * ratio;
}

Coupling coupling(double epsilon, double s) {
  require(std::isfinite(epsilon) && epsilon > 0.0 && epsilon < 1.0, "coupling needs 0 < epsilon < 1");
  require(s > 0.5 && s < 1.5, "coupling needs 1/2 < s < 3/2");
  const double R = std::pow(epsilon, -8.0 * s / (6.0 * s + 1.0));
  const double S = std::pow(epsilon, -2.0 / (6.0 * s + 1.0));
  if (!(R > S)) throw NumericError("coupling produced R <= S");
  return {R, S, s > 1.0};
}

// ExponentSet

namespace {

template <class T>
struct Parsed {
  T s;
  std::optional<T> p, q, a, d, gamma;
};

template <class T>
void add(ExponentSet& set, const std::string& name, const T& value, const std::string& note = "") {
  ExponentEntry e{name, to_double(value), std::nullopt, note};
  if constexpr (std::is_same_v<T, Rational>) e.exact = format_rational(value);
  set.entries.push_back(std::move(e));
}

template <class T>
void fill(ExponentSet& set, const Parsed<T>& in) {
  require_radial_range(in.s);
  add(set, "s", in.s);
  if (in.p) {
    add(set, "p", *in.p);
    add(set, "theta_gn", theta_gn(*in.p, in.s), "(6-5p)/(3-2ps-2p)");
  }
  const GnRange<T> gn = gn_range(in.s);
  add(set, "gn_range.lo", gn.interval.lo, to_string(gn.case_tag));
  if (gn.interval.hi_infinite) {
    set.entries.push_back({"gn_range.hi", std::numeric_limits<double>::infinity(), "inf", to_string(gn.case_tag)});
  } else {
    add(set, "gn_range.hi", gn.interval.hi, to_string(gn.case_tag));
  }
  add(set, "radial_endpoint", radial_endpoint(in.s), "(16s+2)/(6s+1)");
  add(set, "sobolev_endpoint", sobolev_endpoint(in.s), "6/(3-2s)");
  add(set, "nonradial_endpoint", nonradial_endpoint(in.s), "(2+4s)/(1+s)");
  const ExponentInterval<T> cor = corollary_range(in.s);
  add(set, "corollary_range.lo", cor.lo, "open, (8s+1)/(6s+1)");
  add(set, "corollary_range.hi", cor.hi, "closed, 3/(3-2s)");
  if (in.q || in.a || in.gamma) {
    const T d = in.d.value_or(T(3));
    const T q = in.q.value_or(T(2));
    const T a = in.a ? *in.a : (in.gamma ? -*in.gamma : T(0));
    add(set, "q", q);
    add(set, "a", a);
    add(set, "d", d);
    const auto [theta, sigma] = denapoli_exponents(in.s, q, a, d);
    add(set, "denapoli_theta", theta, "2/(2sq+2-q)");
    add(set, "denapoli_sigma", sigma, "(2as+2ds-a-2s)/(2sq+2-q)");
  }
  if (in.gamma) add(set, "gamma", *in.gamma);
  add(set, "sigma_limit", sigma_limit(in.s), "(3s+1/2)/(4s)");
  set.entries.push_back({"pitt_c", pitt_constant(to_double(in.s)), std::nullopt, "pi^{2s}[G((3-2s)/4)/G((3+2s)/4)]^2"});
}

std::optional<double> parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

const ExponentEntry* ExponentSet::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

nlohmann::ordered_json ExponentSet::to_json() const {
  nlohmann::ordered_json j;
  j["exact"] = exact;
  for (const auto& e : entries) {
    nlohmann::ordered_json v;
    if (std::isinf(e.value)) v["value"] = "inf";
    else v["value"] = e.value;
    if (e.exact) v["exact"] = *e.exact;
    if (!e.note.empty()) v["note"] = e.note;
    j[e.name] = v;
  }
  return j;
}

std::string ExponentSet::table() const {
  std::size_t name_w = 4, value_w = 5, exact_w = 5;
  std::vector<std::string> values;
  for (const auto& e : entries) {
    values.push_back(std::isinf(e.value) ? "inf" : format_double(e.value));
    name_w = std::max(name_w, e.name.size());
    value_w = std::max(value_w, values.back().size());
    if (e.exact) exact_w = std::max(exact_w, e.exact->size());
  }
  const auto pad = [](const std::string& x, std::size_t w) { return x + std::string(w - x.size() + 2, ' '); };
  std::ostringstream out;
  out << pad("name", name_w) << pad("value", value_w) << pad("exact", exact_w) << "note\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    std::string line = pad(e.name, name_w) + pad(values[i], value_w) + pad(e.exact.value_or("-"), exact_w) + e.note;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

ExponentSet compute_exponents(const ExponentInputs& inputs) {
  const std::vector<const std::optional<std::string>*> optional_inputs{&inputs.p, &inputs.q, &inputs.a, &inputs.d,
                                                                        &inputs.gamma};
  bool exact = parse_rational(inputs.s).has_value();
  for (const auto* o : optional_inputs) {
    if (*o && !parse_rational(**o)) exact = false;
  }
  ExponentSet set;
  set.exact = exact;
  if (exact) {
    const auto get = [](const std::optional<std::string>& o) -> std::optional<Rational> {
      if (!o) return std::nullopt;
      return parse_rational(*o);
    };
    fill(set, Parsed<Rational>{*parse_rational(inputs.s), get(inputs.p), get(inputs.q), get(inputs.a), get(inputs.d),
                               get(inputs.gamma)});
    return set;
  }
  const auto get = [](const std::optional<std::string>& o, const char* name) -> std::optional<double> {
    if (!o) return std::nullopt;
    const auto v = parse_double(*o);
    if (!v) throw InputError(std::string("cannot parse ") + name + " = '" + *o + "'");
    return v;
  };
  const auto s = get(inputs.s, "s");
  fill(set, Parsed<double>{*s, get(inputs.p, "p"), get(inputs.q, "q"), get(inputs.a, "a"), get(inputs.d, "d"),
                           get(inputs.gamma, "gamma")});
  return set;
}

std::string figure1_csv() {
  std::string out = "s,radial_endpoint,sobolev_endpoint,nonradial_endpoint\n";
  char buf[160];
  for (int i = 55; i <= 145; ++i) {
    const Rational s(i, 100);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", to_double(s), to_double(radial_endpoint(s)),
                  to_double(sobolev_endpoint(s)), to_double(nonradial_endpoint(s)));
    out += buf;
  }
  return out;
}

}  // namespace coulab
