#include <filesystem>
#include <fstream>
#include <sstream>

#include "checks.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "flowsynth/graph_io.hpp"
#include "json.hpp"

using namespace flowsynth;
using namespace flowsynth::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "flowsynth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("analyze emits dot") {
  const Run r = run({"analyze", fixture("Test4.java"), "--emit", "dot"});
  CHECK(r.code == 0);
  CHECK(count(r.out, "style=solid") == 11);
  CHECK(count(r.out, "style=dashed") == 12);
}

TEST_CASE("analyze stages") {
  const Run cf = run({"analyze", fixture("Test4.java"), "--stage", "cf", "--emit", "dot"});
  CHECK(count(cf.out, "style=solid") == 11);
  CHECK(count(cf.out, "style=dashed") == 0);
  const Run st = run({"analyze", fixture("Test4.java"), "--stage", "struct"});
  CHECK(st.code == 0);
  const auto doc = nlohmann::json::parse(st.out);
  CHECK(doc["cfNext"].empty());
}

TEST_CASE("analyze json output is importable") {
  const auto path = (std::filesystem::temp_directory_path() / "flowsynth_cli_out.json").string();
  const Run r = run({"--keep-vars", "analyze", fixture("Test0.java"), "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const FlowGraph g = import_json(read_text(path));
  CHECK(g.edges(EdgeKind::DfNext).size() == 6);
  std::size_t vars = 0;
  for (FlowId id : g.node_ids()) vars += is_data_node(g.node(id).kind) ? 1 : 0;
  CHECK(vars == 3);
}

TEST_CASE("errors exit with 2") {
  CHECK(run({"analyze", fixture("missing.java")}).code == 2);
  CHECK(run({"analyze", fixture("Test4.java"), "--emit", "svg"}).code == 2);
  CHECK(run({}).code == 2);
  const Run bad = run({"validate", fixture("Test4.java")});
  CHECK(bad.code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("validate exit codes") {
  const Run pass = run({"validate", fixture("test4.spec.json")});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);

  const auto spec = std::filesystem::temp_directory_path() / "flowsynth_cli_fail.spec.json";
  std::ofstream(spec) << R"({"input": ")" << fixture("Test4.java") << R"(", "cf": 10})";
  const Run fail = run({"validate", spec.string()});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAIL") != std::string::npos);

  std::ofstream(spec) << R"({"input": ")" << fixture("nope.java") << R"("})";
  CHECK(run({"validate", spec.string()}).code == 2);
}

TEST_CASE("validate json report") {
  const Run r = run({"validate", fixture("test0.spec.json"), "--json-report"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["cf"]["mode"] == "subset");
}

TEST_CASE("render lists statements") {
  const Run r = run({"render", fixture("Test0.java")});
  CHECK(r.code == 0);
  CHECK(r.out == "testMethod()\nint a = 1;\nint b = 2;\nint c = a + b;\nb = a - b;\nreturn b * c;\n");
}
