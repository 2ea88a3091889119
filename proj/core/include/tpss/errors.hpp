#pragma once

#include <stdexcept>
#include <string>

namespace tpss {

/// Raised when an argument lies outside the domain of an operation
/// (out-of-range quantum numbers, forbidden state labels, angles outside [0, pi]).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a conditional polarization state is requested at a direction
/// where the |Lambda| = 2 emission density vanishes.
class NoIntensityError : public std::runtime_error {
 public:
  explicit NoIntensityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tpss
