#pragma once

// Declarative validation: an expectation file names an input program and
// the cfNext/dfNext text pairs (or just their count) the pipeline must
// produce.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "flowsynth/cfa.hpp"
#include "flowsynth/dfa.hpp"
#include "flowsynth/flowgraph.hpp"
#include "flowsynth/source.hpp"

namespace flowsynth {

struct ExactPairs {
  TxtPairSet pairs;
};
struct SubsetPairs {
  TxtPairSet pairs;
};
struct PairCount {
  std::size_t count = 0;
};

/// monostate = no expectation given (skipped).
using EdgeExpectation = std::variant<std::monostate, ExactPairs, SubsetPairs, PairCount>;

struct Expectation {
  std::filesystem::path input;
  EdgeExpectation cf;
  EdgeExpectation df;
};

/// Spec file: {"input": path, "cf": [[s, t]...] | N, "cf_subset": [[s, t]...],
/// "df": ..., "df_subset": ...}. Relative inputs resolve against the spec
/// file's directory. Throws Error(SchemaError).
Expectation load_expectation(const std::filesystem::path& path);
Expectation parse_expectation(std::string_view text, const std::filesystem::path& base_dir = {});

enum class Stage { Struct, Cf, Df };

struct PipelineOptions {
  Stage stop_after = Stage::Df;
  CfOptions cf;
  DfOptions df;
};

struct StageTimings {
  double parse_ms = 0;
  double transform_ms = 0;
  double cf_ms = 0;
  double df_ms = 0;
};

struct PipelineResult {
  FlowGraph graph;
  StageTimings timings;
};

/// .json inputs load as AST documents, anything else parses as source.
SourceTree load_input(const std::filesystem::path& input);

/// frontend -> transform -> cfa -> dfa. Errors are rethrown as StageError
/// tagged with "frontend", "transform", "cfa" or "dfa".
PipelineResult run_pipeline(const std::filesystem::path& input, const PipelineOptions& options = {});

enum class CheckMode { Skipped, Exact, Subset, Count };

struct EdgeCheck {
  CheckMode mode = CheckMode::Skipped;
  TxtPairSet missing;
  TxtPairSet extra;
  std::optional<bool> count_ok;
  std::size_t expected_count = 0;
  std::size_t actual_count = 0;

  bool pass() const { return missing.empty() && extra.empty() && count_ok.value_or(true); }
};

struct ValidationReport {
  EdgeCheck cf;
  EdgeCheck df;
  StageTimings timings;
  std::optional<std::string> error;

  bool pass() const { return !error && cf.pass() && df.pass(); }
  /// 0 pass, 1 mismatch, 2 error.
  int exit_code() const { return error ? 2 : (pass() ? 0 : 1); }
};

EdgeCheck check_edges(const EdgeExpectation& expected, const TxtPairSet& actual);

/// Compares an already-built graph against the expectation.
ValidationReport compare(const Expectation& expectation, const FlowGraph& graph);

/// Runs the pipeline on expectation.input and compares. Pipeline errors are
/// reported, not thrown.
ValidationReport validate(const Expectation& expectation, const PipelineOptions& options = {});

std::string report_text(const ValidationReport& report);
std::string report_json(const ValidationReport& report, int indent = 2);

}  // namespace flowsynth
