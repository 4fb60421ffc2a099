#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace coulab {

// Inputs as text so that decimal values are evaluated exactly.
struct ExponentInputs {
  std::string s;
  std::optional<std::string> p;
  std::optional<std::string> q;
  std::optional<std::string> a;
  std::optional<std::string> d;
  std::optional<std::string> gamma;
};

struct ExponentEntry {
  std::string name;
  double value;
  std::optional<std::string> exact;  // set when every input was rational
  std::string note;
};

struct ExponentSet {
  bool exact = false;
  std::vector<ExponentEntry> entries;

  const ExponentEntry* find(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
  std::string table() const;
};

// Requires 1/2 < s < 3/2. With gamma given, a = -gamma and q defaults to 2;
// with q given, a defaults to 0; d defaults to 3.
ExponentSet compute_exponents(const ExponentInputs& inputs);

// s, radial, sobolev and non-radial endpoints over s = 0.55, 0.56, ..., 1.45.
std::string figure1_csv();

}  // namespace coulab
