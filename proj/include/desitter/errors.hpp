#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace desitter {

/// Input outside the admissible set of a formula (horizon, axis, |v| >= c, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed argument that is not a physics-domain issue (grid too small, bad CFL).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the explicit scheme produces a non-finite or runaway value.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, std::size_t step, double t)
      : std::runtime_error(what), step_(step), time_(t) {}

  std::size_t step() const noexcept { return step_; }
  double time() const noexcept { return time_; }

 private:
  std::size_t step_;
  double time_;
};

}  // namespace desitter

namespace desitter {

/// Invalid run configuration (unknown key, unparsable value, bad preset).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace desitter
