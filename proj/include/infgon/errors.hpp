#pragma once

#include <stdexcept>
#include <string>

namespace infgon {

// Stable machine-readable error codes, shared by the library and the CLI
// (the CLI emits them verbatim in its structured JSON error output).
enum class ErrorCode {
  // window validation
  CrossingPair,
  MissingBoundary,
  NotClosed,
  WrongCount,
  // fountain / mutation
  NoFountain,
  NotMutableHere,
  IncompleteAtVertex,
  FountainCrossing,
  IncompleteCrossings,
  // extensions and AR structure
  NoExtension,
  NoTranslate,
  // friezes
  NonIntegralEntry,
  NonPositiveEntry,
  DoesNotClose,
  Mismatch,
  // Laurent arithmetic
  NonExactDivision,
  // 01-words
  ConsecutiveOnes,
  // generic
  InvalidInput,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string context = "");

  ErrorCode code() const { return code_; }
  const std::string& context() const { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message,
                       const std::string& context = "");

}  // namespace infgon
