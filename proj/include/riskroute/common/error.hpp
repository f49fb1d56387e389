#pragma once

#include <stdexcept>
#include <string>

namespace riskroute {

/// Input data or configuration that fails a documented precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation that cannot produce a result for well-formed input
/// (degenerate fit, infeasible matching, empty selection).
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// LLM transport or protocol failure that survived the retry policy.
class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file contents.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace riskroute
