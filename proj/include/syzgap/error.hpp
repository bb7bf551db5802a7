#pragma once

#include <stdexcept>
#include <string>

namespace syzgap {

/// Raised for invalid user input: malformed expressions, invalid cells,
/// violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails. Seeing one of these
/// means a bug in this library, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace syzgap
