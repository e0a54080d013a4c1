#pragma once

#include <stdexcept>
#include <string>

namespace nlgames {

// Invalid value for a field (probability out of range, non-normalized
// distribution, dimension mismatch, ...).
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally valid input outside the domain where an operation is defined
// (e.g. the closed-form classical maximum outside the p,q >= 1/2 quadrant).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Input exceeds a hard enumeration/size budget; the message names the limit.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlgames
