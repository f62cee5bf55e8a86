#include "flowsynth/errors.hpp"

namespace flowsynth {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownCharacter: return "UnknownCharacter";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnresolvedName: return "UnresolvedName";
    case ErrorCode::UnresolvedLabel: return "UnresolvedLabel";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::NotFlowInstr: return "NotFlowInstr";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::RuleMismatch: return "RuleMismatch";
    case ErrorCode::NoApplicableRule: return "NoApplicableRule";
    case ErrorCode::MalformedLhs: return "MalformedLhs";
    case ErrorCode::EmptyContainer: return "EmptyContainer";
    case ErrorCode::MissingLabelTarget: return "MissingLabelTarget";
    case ErrorCode::MissingLoopContext: return "MissingLoopContext";
    case ErrorCode::MissingSuccessor: return "MissingSuccessor";
    case ErrorCode::ExitNotLast: return "ExitNotLast";
    case ErrorCode::InvalidPendingNode: return "InvalidPendingNode";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

Error::Error(ErrorCode code, const std::string& what, Verbatim)
    : std::runtime_error(what), code_(code) {}

StageError::StageError(std::string stage, const Error& cause)
    : Error(cause.code(), stage + ": " + cause.what(), Verbatim{}),
      stage_(std::move(stage)) {}

}  // namespace flowsynth
