#pragma once

#include <stdexcept>
#include <string>

namespace psiell {

/// Argument outside the domain of a function. The message names the valid domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative method hit its iteration cap. Cannot happen for documented inputs.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Unknown name passed to a registry lookup.
class LookupError : public std::out_of_range {
 public:
  explicit LookupError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace psiell
