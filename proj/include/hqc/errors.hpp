#pragma once

#include <stdexcept>
#include <string>

namespace hqc {

// Base of every computational failure raised by the library. The CLI maps
// these to exit code 1; malformed input maps to ParseError / exit code 2.
class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Zα reached the bound where λ(j) or λ(l) turns complex.
class SupercriticalCharge : public ComputationError {
public:
  using ComputationError::ComputationError;
};

// Argument outside the open domain of a closed-form expression.
class DomainError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class NoBoundRegion : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class QuadratureFailure : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class IllConditionedBasis : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class NoConvergence : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

class DuplicateState : public ParseError {
public:
  using ParseError::ParseError;
};

} // namespace hqc
