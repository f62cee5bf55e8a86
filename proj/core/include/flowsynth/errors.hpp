#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flowsynth {

/// Diagnostic categories raised by every stage of the pipeline.
enum class ErrorCode {
  // frontend
  UnknownCharacter,
  ParseError,
  UnresolvedName,
  UnresolvedLabel,
  SchemaError,
  DanglingReference,
  // render
  UnsupportedKind,
  // flowgraph
  NotFlowInstr,
  UnknownId,
  // transform
  RuleMismatch,
  NoApplicableRule,
  MalformedLhs,
  // cfa
  EmptyContainer,
  MissingLabelTarget,
  MissingLoopContext,
  MissingSuccessor,
  ExitNotLast,
  InvalidPendingNode,
  // harness / io
  IoError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 protected:
  struct Verbatim {};
  Error(ErrorCode code, const std::string& what, Verbatim);

 private:
  ErrorCode code_;
};

/// An error surfaced by run_pipeline, tagged with the stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause);

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace flowsynth
