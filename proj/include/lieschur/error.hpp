#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieschur {

enum class ErrorKind {
  Syntax,
  IndexOutOfRange,
  JacobiViolation,
  DuplicateBracket,
  AmbientMismatch,
  LengthMismatch,
  NotAnIdeal,
  SingularMatrix,
  NotNilpotent,
  Abelian,
  NotCentral,
  ComplexNotExact,
  InvalidArgument,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base exception for everything the library throws on bad input or a
/// violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& msg);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Carries the first failing basis triple (0-based) and a printable form of
/// the nonzero defect vector.
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::array<std::size_t, 3> triple, const std::string& defect);

  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }
  const std::string& defect() const noexcept { return defect_; }

 private:
  std::array<std::size_t, 3> triple_;
  std::string defect_;
};

}  // namespace lieschur
