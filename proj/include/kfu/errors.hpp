#pragma once

#include <stdexcept>
#include <string>

namespace kfu {

// Malformed input text: bad JSON, unknown keys, unparsable rationals.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The complex fails validation or its homology in grading ambient_d is not a
// single F2.
struct NonAdmissibleError : DomainError {
  explicit NonAdmissibleError(const std::string& what)
      : DomainError("non-admissible complex: " + what) {}
};

}  // namespace kfu
