#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdcat {

enum class ErrorKind {
  // input validation
  ParseError,
  DanglingReference,
  DuplicateId,
  MissingComposite,
  ConflictingComposite,
  IllTypedComposite,
  IdentityLaw,
  NonAssociative,
  UnknownObject,
  UnknownArrow,
  NotAFunctor,
  NotNatural,
  NotAPartialOrder,
  NotT0,
  InvalidTopology,
  InvalidComplex,
  InvalidPoint,
  ZeroWeight,
  IndexOutOfRange,
  // resource limits and truncation windows
  CapExceeded,
  BudgetExceeded,
  OutOfTruncation,
  Ungraded,
  EmptyRange,
  // a structural theorem failed on a constructed object
  NotAPoset,
  TheoremViolation,
};

std::string_view to_string(ErrorKind kind);

/// Theorem violations indicate a bug or a finding, never bad input.
bool is_theorem_violation(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sdcat
