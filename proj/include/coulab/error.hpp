#pragma once

#include <stdexcept>
#include <string>

namespace coulab {

// Rejected input: parameter out of range, malformed profile, bad schema.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation produced a non-finite value or could not be carried out.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InputError(message);
}

}  // namespace coulab
