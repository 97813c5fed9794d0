#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace brickforge {

enum class ErrorKind {
  LoopEdge,
  DuplicateEdge,
  MissingEdge,
  MissingVertex,
  BadParameter,
  ParseError,
  TooLarge,
  SameVertex,
  DegreeTooLow,
  BadPartition,
  SpecInvariantViolated,
  NeighborChoiceInfeasible,
  NotABrick,
  FundamentConflict,
  FundamentMismatch,
  PreconditionUnmet,
  NotMinimalBrick,
  CapExceeded,
  InternalCheckFailed,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` discriminates.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based line (text formats) or 0-based byte offset (graph6).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised when a step of a sequence fails; `step()` is 1-based.
class StepError : public Error {
 public:
  StepError(ErrorKind kind, std::size_t step, const std::string& what)
      : Error(kind, "step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace brickforge
