#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "flowsynth/errors.hpp"
#include "flowsynth/graph_io.hpp"
#include "flowsynth/harness.hpp"
#include "flowsynth/render.hpp"

namespace flowsynth::cli {

namespace {

constexpr int kExitError = 2;

void print_statements(const SourceTree& tree, std::ostream& out) {
  for (NodeId method : tree.methods()) {
    out << render(tree, method) << "\n";
    for (NodeId id : containment_closure(tree, method)) {
      if (is_statement(tree.at(id).kind())) out << render(tree, id) << "\n";
    }
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure-graph construction and control/data-flow synthesis for a Java subset",
               "flowsynth"};
  app.require_subcommand(1);
  app.fallthrough();

  PipelineOptions options;
  app.add_flag("--implicit-exit-fallthrough", options.cf.implicit_exit_fallthrough,
               "Link a trailing method-level instruction to the exit");
  app.add_flag("--keep-vars", options.df.keep_vars, "Keep Var/Param nodes after data-flow synthesis");

  std::string input;
  std::string stage = "df";
  std::string emit = "json";
  std::string output;
  auto* analyze = app.add_subcommand("analyze", "Run the pipeline and export the graph");
  analyze->add_option("input", input, "Source (.java) or AST (.json) file")->required();
  analyze->add_option("--stage", stage, "Last stage to run")
      ->check(CLI::IsMember({"struct", "cf", "df"}));
  analyze->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"json", "dot"}));
  analyze->add_option("-o,--output", output, "Write to PATH instead of stdout");

  std::string spec;
  bool json_report = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check pipeline output against a spec file");
  validate_cmd->add_option("spec", spec, "Expectation spec (.json)")->required();
  validate_cmd->add_flag("--json-report", json_report, "Print the report as JSON");

  std::string render_input;
  auto* render_cmd = app.add_subcommand("render", "Print the rendered text of every statement");
  render_cmd->add_option("input", render_input, "Source (.java) or AST (.json) file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*analyze) {
      options.stop_after = stage == "struct" ? Stage::Struct : stage == "cf" ? Stage::Cf : Stage::Df;
      const PipelineResult result = run_pipeline(input, options);
      const std::string text = emit == "dot" ? export_dot(result.graph) : export_json(result.graph) + "\n";
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream file(output);
        if (!file) throw Error(ErrorCode::IoError, "cannot write " + output);
        file << text;
      }
      return 0;
    }
    if (*validate_cmd) {
      const Expectation expectation = load_expectation(spec);
      const ValidationReport report = validate(expectation, options);
      if (json_report) {
        out << report_json(report) << "\n";
      } else {
        out << report_text(report);
      }
      if (report.error) err << *report.error << "\n";
      return report.exit_code();
    }
    if (*render_cmd) {
      print_statements(load_input(render_input), out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace flowsynth::cli
