#pragma once

#include <stdexcept>
#include <string>

namespace mono {

// Malformed user input: bad edge lists, pattern strings, graphon files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested computation would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The configuration lies outside the hypotheses of the limit theorems
// (zero pattern density, vanishing variance, all-zero spectrum).
class DegenerateConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace mono
