#pragma once

#include <stdexcept>
#include <string>

namespace univalg {

// Operand shapes disagree (vector lengths, matrix sizes, module ranks).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Objects belong to different algebras / rings / universal constructions.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configurable computation budget was exhausted. Never accompanied by
// partial output.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a mathematical precondition (e.g. a map that is not
// equivariant, a representation that does not satisfy the relations).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency check failed. Indicates a bug, not bad input.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed textual input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace univalg
