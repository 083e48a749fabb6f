#include "infgon/errors.hpp"

namespace infgon {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CrossingPair: return "CrossingPair";
    case ErrorCode::MissingBoundary: return "MissingBoundary";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::NoFountain: return "NoFountain";
    case ErrorCode::NotMutableHere: return "NotMutableHere";
    case ErrorCode::IncompleteAtVertex: return "IncompleteAtVertex";
    case ErrorCode::FountainCrossing: return "FountainCrossing";
    case ErrorCode::IncompleteCrossings: return "IncompleteCrossings";
    case ErrorCode::NoExtension: return "NoExtension";
    case ErrorCode::NoTranslate: return "NoTranslate";
    case ErrorCode::NonIntegralEntry: return "NonIntegralEntry";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::DoesNotClose: return "DoesNotClose";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::ConsecutiveOnes: return "ConsecutiveOnes";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string context)
    : std::runtime_error(std::string(to_string(code)) + ": " + message +
                         (context.empty() ? "" : " [" + context + "]")),
      code_(code),
      context_(std::move(context)) {}

void fail(ErrorCode code, const std::string& message, const std::string& context) {
  throw Error(code, message, context);
}

}  // namespace infgon
