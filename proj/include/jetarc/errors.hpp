#pragma once

#include <stdexcept>
#include <string>

namespace jetarc {

// Malformed input: syntax errors, unknown names, violated preconditions.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource limit (Groebner pair budget, enumeration bound) was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check that must hold mathematically has failed.
class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jetarc
