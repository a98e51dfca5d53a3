#pragma once

#include <stdexcept>

namespace knotkit {

// Input rejected by a mathematical precondition (e.g. the continued
// fraction of 1/0, or homology of a two-component link).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input; the message names the offending token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace knotkit
