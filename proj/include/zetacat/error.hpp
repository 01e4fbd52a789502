#pragma once

#include <stdexcept>
#include <string>

namespace zetacat {

// Malformed or out-of-range input supplied by the caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but outside the domain where the operation is defined
// (e.g. a graph with loops handed to the non-backtracking operator).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An identity that must hold by construction failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zetacat
