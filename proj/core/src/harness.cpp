#include "flowsynth/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "flowsynth/ast_json.hpp"
#include "flowsynth/errors.hpp"
#include "flowsynth/parser.hpp"
#include "flowsynth/transform.hpp"
#include "json.hpp"

namespace flowsynth {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TxtPairSet read_pairs(const json& v, const std::string& key) {
  if (!v.is_array()) schema("$." + key + ": expected array of pairs or a count");
  TxtPairSet pairs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& p = v[i];
    const std::string path = "$." + key + "[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      schema(path + ": expected [string, string]");
    }
    auto source = p[0].get<std::string>();
    auto target = p[1].get<std::string>();
    if (source.empty() || target.empty()) schema(path + ": empty text");
    pairs.emplace(std::move(source), std::move(target));
  }
  return pairs;
}

EdgeExpectation read_edge_expectation(const json& doc, const std::string& key) {
  const std::string subset_key = key + "_subset";
  const bool has_exact = doc.contains(key);
  const bool has_subset = doc.contains(subset_key);
  if (has_exact && has_subset) schema("$: '" + key + "' and '" + subset_key + "' are mutually exclusive");
  if (has_subset) return SubsetPairs{read_pairs(doc[subset_key], subset_key)};
  if (!has_exact) return std::monostate{};
  const json& v = doc[key];
  if (v.is_number_integer()) {
    if (v.get<long long>() < 0) schema("$." + key + ": count must be non-negative");
    return PairCount{v.get<std::size_t>()};
  }
  return ExactPairs{read_pairs(v, key)};
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class Fn>
auto staged(const char* stage, double& ms, Fn&& fn) {
  const auto start = Clock::now();
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      ms = elapsed_ms(start);
    } else {
      auto result = fn();
      ms = elapsed_ms(start);
      return result;
    }
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, e);
  }
}

json pairs_json(const TxtPairSet& pairs) {
  json out = json::array();
  for (const auto& [s, t] : pairs) out.push_back({s, t});
  return out;
}

std::string_view mode_name(CheckMode mode) {
  switch (mode) {
    case CheckMode::Skipped: return "skipped";
    case CheckMode::Exact: return "exact";
    case CheckMode::Subset: return "subset";
    case CheckMode::Count: return "count";
  }
  return "?";
}

json check_json(const EdgeCheck& check) {
  json j;
  j["mode"] = mode_name(check.mode);
  j["pass"] = check.pass();
  j["missing"] = pairs_json(check.missing);
  j["extra"] = pairs_json(check.extra);
  if (check.count_ok) {
    j["count_ok"] = *check.count_ok;
    j["expected_count"] = check.expected_count;
    j["actual_count"] = check.actual_count;
  }
  return j;
}

void write_pairs(std::ostream& out, const TxtPairSet& pairs) {
  for (const auto& [s, t] : pairs) out << "    [" << json(s).dump() << " " << json(t).dump() << "]\n";
}

void write_check(std::ostream& out, const EdgeCheck& check, std::string_view short_name,
                 std::string_view link_name) {
  switch (check.mode) {
    case CheckMode::Skipped:
      out << "No expected " << link_name << " links given.\n";
      return;
    case CheckMode::Count:
      out << "Only checking number of " << link_name << " links.\n";
      out << "  expected " << check.expected_count << ", got " << check.actual_count
          << (check.count_ok.value_or(false) ? " (ok)\n" : " (MISMATCH)\n");
      return;
    case CheckMode::Subset:
    case CheckMode::Exact:
      if (!check.missing.empty()) {
        out << "Missing " << short_name << "-edges:\n";
        write_pairs(out, check.missing);
      }
      if (!check.extra.empty()) {
        out << "Too many " << short_name << "-edges:\n";
        write_pairs(out, check.extra);
      }
      if (check.pass()) {
        out << link_name << ": " << (check.mode == CheckMode::Subset ? "all listed links present" : "exact match")
            << "\n";
      }
      return;
  }
}

}  // namespace

Expectation parse_expectation(std::string_view text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema(std::string("$: ") + e.what());
  }
  if (!doc.is_object()) schema("$: expected object");
  if (!doc.contains("input") || !doc["input"].is_string()) schema("$.input: expected string");

  Expectation exp;
  std::filesystem::path input = doc["input"].get<std::string>();
  exp.input = input.is_relative() && !base_dir.empty() ? base_dir / input : input;
  exp.cf = read_edge_expectation(doc, "cf");
  exp.df = read_edge_expectation(doc, "df");
  return exp;
}

Expectation load_expectation(const std::filesystem::path& path) {
  return parse_expectation(read_file(path), path.parent_path());
}

SourceTree load_input(const std::filesystem::path& input) {
  if (input.extension() == ".json") return load_ast_json(input);
  return parse_source(read_file(input));
}

PipelineResult run_pipeline(const std::filesystem::path& input, const PipelineOptions& options) {
  PipelineResult result;
  auto& t = result.timings;
  const SourceTree tree = staged("frontend", t.parse_ms, [&] { return load_input(input); });
  result.graph = staged("transform", t.transform_ms, [&] { return java_to_flowgraph(tree).graph; });
  if (options.stop_after == Stage::Struct) return result;
  staged("cfa", t.cf_ms, [&] { synthesize_cf_edges(result.graph, options.cf); });
  if (options.stop_after == Stage::Cf) return result;
  staged("dfa", t.df_ms, [&] { synthesize_df_edges(result.graph, options.df); });
  return result;
}

EdgeCheck check_edges(const EdgeExpectation& expected, const TxtPairSet& actual) {
  EdgeCheck check;
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          check.mode = CheckMode::Skipped;
        } else if constexpr (std::is_same_v<T, PairCount>) {
          check.mode = CheckMode::Count;
          check.expected_count = e.count;
          check.actual_count = actual.size();
          check.count_ok = e.count == actual.size();
        } else {
          check.mode = std::is_same_v<T, ExactPairs> ? CheckMode::Exact : CheckMode::Subset;
          std::set_difference(e.pairs.begin(), e.pairs.end(), actual.begin(), actual.end(),
                              std::inserter(check.missing, check.missing.end()));
          if constexpr (std::is_same_v<T, ExactPairs>) {
            std::set_difference(actual.begin(), actual.end(), e.pairs.begin(), e.pairs.end(),
                                std::inserter(check.extra, check.extra.end()));
          }
        }
      },
      expected);
  return check;
}

ValidationReport compare(const Expectation& expectation, const FlowGraph& graph) {
  ValidationReport report;
  report.cf = check_edges(expectation.cf, cross_pairs(graph, EdgeKind::CfNext));
  report.df = check_edges(expectation.df, cross_pairs(graph, EdgeKind::DfNext));
  return report;
}

ValidationReport validate(const Expectation& expectation, const PipelineOptions& options) {
  ValidationReport report;
  try {
    PipelineResult result = run_pipeline(expectation.input, options);
    report = compare(expectation, result.graph);
    report.timings = result.timings;
  } catch (const Error& e) {
    report.error = e.what();
  }
  return report;
}

std::string report_text(const ValidationReport& report) {
  std::ostringstream out;
  if (report.error) {
    out << "ERROR: " << *report.error << "\n";
    return out.str();
  }
  out << "Execution Times:\n";
  out << "  - Load:                  " << report.timings.parse_ms << " ms\n";
  out << "  - Structure graph:       " << report.timings.transform_ms << " ms\n";
  out << "  - Control flow analysis: " << report.timings.cf_ms << " ms\n";
  out << "  - Data flow analysis:    " << report.timings.df_ms << " ms\n";
  write_check(out, report.cf, "cf", "cfNext");
  write_check(out, report.df, "df", "dfNext");
  out << (report.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string report_json(const ValidationReport& report, int indent) {
  json j;
  j["pass"] = report.pass();
  j["cf"] = check_json(report.cf);
  j["df"] = check_json(report.df);
  j["timings_ms"] = {{"parse", report.timings.parse_ms},
                     {"transform", report.timings.transform_ms},
                     {"cf", report.timings.cf_ms},
                     {"df", report.timings.df_ms}};
  if (report.error) j["error"] = *report.error;
  return j.dump(indent);
}

}  // namespace flowsynth
