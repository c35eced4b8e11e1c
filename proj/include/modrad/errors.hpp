#ifndef MODRAD_ERRORS_HPP
#define MODRAD_ERRORS_HPP

#include <stdexcept>

namespace modrad {

/// Request outside the supported ring/representation combinations.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input (JSON or CLI arguments).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace modrad

#endif  // MODRAD_ERRORS_HPP
