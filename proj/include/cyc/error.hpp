#pragma once

#include <stdexcept>
#include <string>

namespace cyc {

// Every failure mode the library reports. Carrying a kind (rather than one
// exception class per failure) keeps call sites able to branch on category
// while the message stays human-readable.
enum class ErrorKind {
  OutOfRangeEntry,
  NotLatinSquare,
  NotAssociative,
  NoIdentityAtZero,
  BadParameter,
  ActionNotAutomorphism,
  ActionNotHomomorphism,
  GeneratorsDontGenerate,
  ClosureTooLarge,
  NotAPermutation,
  ParseError,
  EvalError,
  ExpectedMismatch,
  SearchBudgetExceeded,
  AmbiguousMatch,
  MalformedPredicate,
  InternalInconsistency,
  UnknownTheoremId,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cyc
