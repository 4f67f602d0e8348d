#pragma once

#include <stdexcept>
#include <string>

namespace swing {

// Malformed input text (rational strings, JSON payloads, flags).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed request outside the mathematical regime of an operation:
// degenerate energies, excluded parameter branches, non-Fuchsian input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A truncated series cannot certify the coefficients a caller asked for.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The exact number tower cannot represent the requested value
// (products of surds with different radicands, algebraic extensions).
class NotRepresentable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swing
