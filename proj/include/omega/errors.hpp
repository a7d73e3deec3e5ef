#ifndef OMEGA_ERRORS_HPP
#define OMEGA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace omega {

struct NonBinaryDigit : std::invalid_argument {
  explicit NonBinaryDigit(const std::string& msg) : std::invalid_argument(msg) {}
};

struct SpecMismatch : std::invalid_argument {
  explicit SpecMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct MalformedExponent : std::invalid_argument {
  explicit MalformedExponent(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ColorConflict : std::invalid_argument {
  explicit ColorConflict(const std::string& msg) : std::invalid_argument(msg) {}
};

struct MixedValue : std::invalid_argument {
  explicit MixedValue(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace omega

#endif
