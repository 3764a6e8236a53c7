#pragma once

#include <stdexcept>
#include <string>

namespace folia {

// Malformed or incompatible input: unknown names, chart mismatch, bad
// degrees, zero denominators supplied by the caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Division by an exact zero during field arithmetic.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The hypotheses of a check do not hold for the given data (e.g. a web
// whose members are not integrable).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structure that the input was expected to carry could not be found,
// e.g. no common theta-form for a family of one-forms.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace folia
