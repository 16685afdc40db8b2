#pragma once

#include <stdexcept>
#include <string>

namespace taudiff {

// Every failure raised by the library derives from Error.  The kind() tag is
// what the CLI maps onto exit codes; what() carries the human readable detail
// (including witnesses where the operation produces one).
enum class ErrorKind {
  DivisionByZero,
  UnknownSymbol,
  ContextMismatch,
  IndexOutOfRange,
  ArityMismatch,
  ResourceLimit,
  NotADomainSuspected,
  SyntaxError,
  NotAnAlgebraMap,
  ZeroDenominator,
  NotAnExtension,
  NotTauDerivation,
  NotAMorphism,
  BasePointMismatch,
  NotOnVariety,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry a 1-based position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Raised when elimination multiplies two nonzero residues and gets zero.
class NotADomainError : public Error {
 public:
  NotADomainError(std::string left, std::string right)
      : Error(ErrorKind::NotADomainSuspected,
              "(" + left + ") * (" + right + ") reduces to 0 modulo the ideal"),
        left_(std::move(left)),
        right_(std::move(right)) {}

  const std::string& left() const noexcept { return left_; }
  const std::string& right() const noexcept { return right_; }

 private:
  std::string left_;
  std::string right_;
};

}  // namespace taudiff
