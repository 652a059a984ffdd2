#pragma once

#include <stdexcept>
#include <string>

namespace dwork {

// Caller passed arguments that violate an operation's contract
// (mismatched truncation orders, bad sizes, malformed text).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Family data (n, d, W) violating the defining conditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically meaningful input outside an operation's domain,
// e.g. a character vector with a zero coordinate.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonUnitError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Cases the engine recognizes but deliberately does not handle
// (degenerate hypergeometric parameters, logarithmic monodromy).
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dwork
