#include "lieschur/error.hpp"

namespace lieschur {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::DuplicateBracket: return "DuplicateBracket";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::Abelian: return "Abelian";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::ComplexNotExact: return "ComplexNotExact";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "IoError";
  }
  return "UnknownError";
}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
    : Error(ErrorKind::Syntax,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

JacobiViolation::JacobiViolation(std::array<std::size_t, 3> triple, const std::string& defect)
    : Error(ErrorKind::JacobiViolation,
            "Jacobi identity fails for (e" + std::to_string(triple[0] + 1) + ",e" +
                std::to_string(triple[1] + 1) + ",e" + std::to_string(triple[2] + 1) +
                "), defect " + defect),
      triple_(triple),
      defect_(defect) {}

}  // namespace lieschur
