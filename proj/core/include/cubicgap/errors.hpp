#pragma once

#include <stdexcept>
#include <string>

namespace cubicgap {

/// Malformed graph6 input.
class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// exact_divide was asked to divide by a polynomial that leaves a remainder.
class InexactDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation's documented precondition on its input does not hold
/// (non-cubic host, invalid cycle, least eigenvalue below -1, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cubicgap
