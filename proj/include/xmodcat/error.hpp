#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xmodcat {

/// Dense element / object / morphism index. All finite structures in this
/// library are tables over 0..n-1.
using Index = std::uint32_t;
inline constexpr Index kNone = static_cast<Index>(-1);

enum class ErrorKind {
  MalformedTable,
  NoIdentity,
  MissingInverse,
  NonAssociative,
  ComponentInvalid,
  AxiomViolation,
  SpaceNotAbelian,
  BudgetExceeded,
  NotComposable,
  MixedCrossedModules,
  BoundaryViolation,
  NotAdjacent,
  AdjacencyViolation,
  IdentityLawViolation,
  TypeMismatch,
  InvalidAction,
  SyntaxError,
  UnknownName,
  Io,
  Format,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::ComponentInvalid: return "ComponentInvalid";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::SpaceNotAbelian: return "SpaceNotAbelian";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::MixedCrossedModules: return "MixedCrossedModules";
    case ErrorKind::BoundaryViolation: return "BoundaryViolation";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::AdjacencyViolation: return "AdjacencyViolation";
    case ErrorKind::IdentityLawViolation: return "IdentityLawViolation";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

/// Library exception. `witness` holds the indices that exhibit the failure
/// (an element, a triple, a cell coordinate...), in the order the message
/// names them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<long long> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<long long>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<long long> witness_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& what)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what,
              {static_cast<long long>(line), static_cast<long long>(column)}),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace xmodcat
