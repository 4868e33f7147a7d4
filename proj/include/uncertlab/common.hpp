#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uncertlab {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Raised when a state does not fit the grid it was requested on
// (packet narrower than a few cells, support touching the wrap, ...).
struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by reduce() when the requested sector carries no probability.
struct EmptySectorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Configuration parse/validation failure; message carries the key path.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace uncertlab
