#ifndef ALBO_ERRORS_HPP
#define ALBO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace albo {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the parser on malformed input. Positions are 1-based.
struct ParseError : Error {
  ParseError(int line, int col, const std::string& message)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + message),
        line(line),
        col(col) {}
  int line = 0;
  int col = 0;
};

// Raised when one identifier is used in two different alphabets
// (e.g. both as a concept symbol and as a role symbol).
struct AlphabetClash : Error {
  using Error::Error;
};

// Raised by internalize() when a problem has no goal concept.
struct EmptyProblem : Error {
  using Error::Error;
};

// Raised by apply() when the given rule instance is not applicable.
struct RuleNotApplicable : Error {
  using Error::Error;
};

// Raised by extract_model() on a branch that still has applicable rules.
struct NotExpanded : Error {
  using Error::Error;
};

// Raised by extract_model() on a closed branch.
struct ClosedBranch : Error {
  using Error::Error;
};

// Raised by model evaluation when a concept mentions an individual the
// model does not assign.
struct UnboundIndividual : Error {
  using Error::Error;
};

// Raised when an internal invariant is violated (a bug, not a user error).
struct InternalError : Error {
  using Error::Error;
};

}  // namespace albo

#endif  // ALBO_ERRORS_HPP
