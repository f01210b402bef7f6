#pragma once

#include <stdexcept>
#include <string>

namespace khc {

// Failure categories. Most codes signal data or requests that violate a
// documented precondition; the last two mean a computed result broke an
// identity every operation must preserve, i.e. a bug in the calculator.
enum class ErrC {
  MalformedAngle,
  UnknownPoint,
  NegativeMultiplicity,
  ChiIsOne,
  NotScalarAtInfinity,
  ChiMismatch,
  NegativeHodgeNumber,
  NegativeDimension,
  NotRigid,
  NotAllowed,
  NotMultiplicityFree,
  ShapeMismatch,
  MissingTrivialBlock,
  Inconsistent,
  IterationCapExceeded,
  InvariantViolation,
};

const char* to_string(ErrC code);

class CalcError : public std::runtime_error {
public:
  CalcError(ErrC code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrC code() const { return code_; }

  // Internal errors indicate a broken invariant rather than bad input.
  bool internal() const {
    return code_ == ErrC::InvariantViolation || code_ == ErrC::IterationCapExceeded;
  }

private:
  ErrC code_;
};

}  // namespace khc
