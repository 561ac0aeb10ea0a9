#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace lorentzkit {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A derivative was requested exactly at a segment boundary.
class BreakpointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A defining integral or supremum is infinite. `side` names which quantity
/// diverged (e.g. "target", "gradient", "hardy_lhs").
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::string side, const std::string& what)
      : std::runtime_error(what), side_(std::move(side)) {}
  const std::string& side() const noexcept { return side_; }

 private:
  std::string side_;
};

}  // namespace lorentzkit
