#pragma once

#include <stdexcept>
#include <string>

namespace cycsep {

// Thrown when a counting formula is asked about an instance outside its
// validity range (n < m*p*k + 1). The CLI maps this to exit code 3.
class HypothesisError : public std::domain_error {
 public:
  explicit HypothesisError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when an enumeration would exceed the configured budget.
// The CLI maps this to exit code 4.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cycsep
