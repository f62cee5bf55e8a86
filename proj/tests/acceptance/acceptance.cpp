// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "checks.hpp"
#include "cli.hpp"
#include "flowsynth/cfa.hpp"
#include "flowsynth/dfa.hpp"
#include "flowsynth/errors.hpp"
#include "flowsynth/harness.hpp"
#include "flowsynth/lexer.hpp"
#include "flowsynth/parser.hpp"
#include "flowsynth/render.hpp"
#include "program_gen.hpp"

using namespace flowsynth;
using namespace flowsynth::testing;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kRandomPrograms = 250;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string show(const TxtPairSet& pairs) {
  std::string out;
  for (const auto& [s, t] : pairs) out += " (" + s + " -> " + t + ")";
  return out;
}

Outcome test4_exact() {
  Outcome o;
  const Expectation spec = load_expectation(fixture("test4.spec.json"));
  const auto start = Clock::now();
  const ValidationReport report = validate(spec);
  const double elapsed = seconds_since(start);
  if (report.error) o.fail(*report.error);
  if (std::get<ExactPairs>(spec.cf).pairs.size() != 11 || std::get<ExactPairs>(spec.df).pairs.size() != 12) {
    o.fail("fixture does not list 11 cf and 12 df pairs");
  }
  if (!report.cf.missing.empty()) o.fail("missing cf:" + show(report.cf.missing));
  if (!report.cf.extra.empty()) o.fail("extra cf:" + show(report.cf.extra));
  if (!report.df.missing.empty()) o.fail("missing df:" + show(report.df.missing));
  if (!report.df.extra.empty()) o.fail("extra df:" + show(report.df.extra));
  if (elapsed >= 1.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "11 cf + 12 df pairs, " + std::to_string(elapsed * 1000) + " ms";
  return o;
}

Outcome test0_containment() {
  Outcome o;
  const ValidationReport report = validate(load_expectation(fixture("test0.spec.json")));
  if (report.error) o.fail(*report.error);
  if (report.cf.mode != CheckMode::Subset || report.df.mode != CheckMode::Subset) o.fail("not a subset spec");
  if (!report.cf.missing.empty()) o.fail("missing cf:" + show(report.cf.missing));
  if (!report.df.missing.empty()) o.fail("missing df:" + show(report.df.missing));
  if (o.pass) o.detail = "2 cf + 2 df listed pairs present";
  return o;
}

Outcome dfa_oracle() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t edges = 0;
  for (int seed = 1; seed <= kRandomPrograms; ++seed) {
    const std::string source = generate_program(static_cast<std::uint64_t>(seed) * 2654435761u);
    Analyzed a = analyze_source(source, true, false);
    const auto expected = df_oracle(a.graph);
    synthesize_df_edges(a.graph);
    const auto list = a.graph.edges(EdgeKind::DfNext);
    const std::set<std::pair<FlowId, FlowId>> actual(list.begin(), list.end());
    edges += actual.size();
    if (actual != expected) o.fail("seed " + std::to_string(seed) + " differs from oracle");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(kRandomPrograms) + " programs, " + std::to_string(edges) + " edges, " +
               std::to_string(elapsed) + " s";
  }
  return o;
}

Outcome cfa_invariants() {
  Outcome o;
  std::vector<std::string> programs;
  for (const char* name : {"Test0.java", "Test4.java", "Labels.java"}) programs.push_back(read_text(fixture(name)));
  for (int seed = 1; seed <= kRandomPrograms; ++seed) {
    programs.push_back(generate_program(static_cast<std::uint64_t>(seed) * 2654435761u));
  }
  programs.push_back(generate_unit(99, 8));
  for (std::size_t i = 0; i < programs.size(); ++i) {
    const Analyzed a = analyze_source(programs[i], true, false);
    const auto problems = cfa_violations(a.graph);
    if (!problems.empty()) o.fail("program " + std::to_string(i) + ": " + problems.front());
  }
  if (o.pass) o.detail = std::to_string(programs.size()) + " programs";
  return o;
}

Outcome memoization() {
  Outcome o;
  std::vector<std::string> programs;
  for (const char* name : {"Test0.java", "Test4.java", "Labels.java"}) programs.push_back(read_text(fixture(name)));
  for (int seed = 1; seed <= 100; ++seed) programs.push_back(generate_program(static_cast<std::uint64_t>(seed)));
  for (std::size_t i = 0; i < programs.size(); ++i) {
    const SourceTree tree = parse_source(programs[i]);
    FlowGraph graph;
    Transformer t(tree, graph);
    t.run();
    const auto problems = memo_violations(tree, t, graph);
    if (!problems.empty()) o.fail("program " + std::to_string(i) + ": " + problems.front());
  }
  if (o.pass) o.detail = std::to_string(programs.size()) + " programs";
  return o;
}

// Re-spaces a program token by token with random whitespace runs.
std::string respace(std::string_view source, std::uint64_t seed) {
  static const char* kGaps[] = {" ", "  ", "\n", "\t", " \n  ", " // note\n"};
  std::mt19937_64 rng(seed);
  std::string out;
  for (const Token& t : tokenize(source)) {
    if (t.kind == TokenKind::End) break;
    out += t.text;
    out += kGaps[std::uniform_int_distribution<int>(0, 5)(rng)];
  }
  return out;
}

std::vector<std::string> statement_texts(const SourceTree& tree) {
  std::vector<std::string> out;
  for (NodeId m : tree.methods()) {
    for (NodeId id : containment_closure(tree, m)) {
      if (is_statement(tree.at(id).kind())) out.push_back(render(tree, id));
    }
  }
  return out;
}

Outcome render_round_trip() {
  Outcome o;
  std::size_t checked = 0;
  for (const char* name : {"Test0.java", "Test4.java"}) {
    const std::string source = read_text(fixture(name));
    const auto reference = statement_texts(parse_source(source));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      if (statement_texts(parse_source(respace(source, seed))) != reference) {
        o.fail(std::string(name) + " re-spaced with seed " + std::to_string(seed) + " renders differently");
      }
    }
    // Simple statements: render(parse(text)) is a fixed point.
    for (const std::string& text : reference) {
      if (text.empty() || text.back() != ';') continue;
      const SourceTree tree = parse_source("int m(int a, int b, int c, int i) { " + respace(text, checked) + " }");
      const NodeId stmt = tree.get<ast::Method>(tree.methods()[0]).statements.at(0);
      if (render(tree, stmt) != text) o.fail("\"" + text + "\" re-renders as \"" + render(tree, stmt) + "\"");
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " simple statements fixed, 10 re-spaced programs";
  return o;
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "flowsynth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream sink;
  return cli::run(static_cast<int>(argv.size()), argv.data(), sink, sink);
}

Outcome harness_semantics() {
  Outcome o;
  const Expectation base = load_expectation(fixture("test4.spec.json"));
  const auto& cf = std::get<ExactPairs>(base.cf).pairs;

  // Every single-pair rewrite and every single-pair removal.
  for (const TxtPair& pair : cf) {
    Expectation rewritten = base;
    auto& pairs = std::get<ExactPairs>(rewritten.cf).pairs;
    pairs.erase(pair);
    pairs.emplace(pair.first, pair.second + " #");
    const ValidationReport r = validate(rewritten);
    if (r.cf.missing.size() != 1 || r.cf.extra.size() != 1) o.fail("rewrite of one pair not reported 1/1");

    Expectation dropped = base;
    std::get<ExactPairs>(dropped.cf).pairs.erase(pair);
    const ValidationReport d = validate(dropped);
    if (d.cf.missing.size() != 0 || d.cf.extra.size() != 1) o.fail("dropping one pair not reported 0 missing/1 extra");
    if (d.exit_code() != 1) o.fail("mismatch does not exit 1");
  }
  Expectation added = base;
  std::get<ExactPairs>(added.cf).pairs.emplace("Exit", "Exit");
  const ValidationReport a = validate(added);
  if (a.cf.missing.size() != 1 || !a.cf.extra.empty()) o.fail("adding one pair not reported 1 missing/0 extra");

  // Count mode is exactly cardinality equality.
  for (std::size_t n = 0; n <= 24; ++n) {
    Expectation counted = base;
    counted.cf = PairCount{n};
    counted.df = PairCount{12};
    if (validate(counted).pass() != (n == 11)) o.fail("count mode wrong for " + std::to_string(n));
  }

  // Exit codes through the command line.
  const auto failing = std::filesystem::temp_directory_path() / "flowsynth_acceptance_fail.spec.json";
  std::ofstream(failing) << R"({"input": ")" << fixture("Test4.java") << R"(", "cf": 3})";
  const auto broken = std::filesystem::temp_directory_path() / "flowsynth_acceptance_err.spec.json";
  std::ofstream(broken) << R"({"input": ")" << fixture("absent.java") << R"(", "cf": 3})";
  if (run_cli({"validate", fixture("test4.spec.json")}) != 0) o.fail("passing spec does not exit 0");
  if (run_cli({"validate", failing.string()}) != 1) o.fail("failing spec does not exit 1");
  if (run_cli({"validate", broken.string()}) != 2) o.fail("missing input does not exit 2");
  if (run_cli({"analyze"}) != 2) o.fail("usage error does not exit 2");

  if (o.pass) o.detail = "perturbations, count mode, exit codes 0/1/2";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"test4_exact_edges", test4_exact},
      {"test0_listed_edges_present", test0_containment},
      {"dfa_matches_reachability_oracle", dfa_oracle},
      {"cfa_structural_invariants", cfa_invariants},
      {"transform_memoization_audit", memoization},
      {"render_round_trip", render_round_trip},
      {"harness_semantics", harness_semantics},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
