#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

// Malformed input: unordered tuples, duplicates, zero, unparsable numbers.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that is mathematically outside an operation's domain,
// e.g. a "triple" whose pairwise products are not all one below a square.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A lemma hypothesis (such as B >= 8) is not met. Kept apart from
// DomainError so callers can tell "hypothesis unmet" from "claim false".
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A numeric procedure was configured so that it cannot succeed, e.g. a
// bisection bracket with no sign change.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dioph
