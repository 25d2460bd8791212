#pragma once

#include <stdexcept>
#include <string>

namespace pifs {

/// Domain or contract violation (bad arguments, invalid config, carrier
/// escapes, mismatched spaces).
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Iteration budget exhausted before the stopping rule fired.
class convergence_error : public error {
 public:
  explicit convergence_error(const std::string& what) : error(what) {}
};

}  // namespace pifs
