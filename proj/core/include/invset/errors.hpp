#pragma once

#include <stdexcept>
#include <string>

namespace invset {

/// Raised when an input is well-formed but violates a mathematical
/// precondition (out-of-range cosine, inadmissible finiteness data, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when textual input cannot be parsed into an exact value.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace invset
