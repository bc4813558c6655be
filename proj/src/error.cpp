#include "cyc/error.hpp"

namespace cyc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRangeEntry: return "OutOfRangeEntry";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ActionNotAutomorphism: return "ActionNotAutomorphism";
    case ErrorKind::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case ErrorKind::GeneratorsDontGenerate: return "GeneratorsDontGenerate";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EvalError: return "EvalError";
    case ErrorKind::ExpectedMismatch: return "ExpectedMismatch";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorKind::MalformedPredicate: return "MalformedPredicate";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::UnknownTheoremId: return "UnknownTheoremId";
  }
  return "UnknownError";
}

}  // namespace cyc
