#include <functional>

#include "checks.hpp"
#include "doctest.h"
#include "flowsynth/ast_json.hpp"
#include "flowsynth/errors.hpp"
#include "flowsynth/lexer.hpp"
#include "flowsynth/parser.hpp"
#include "program_gen.hpp"

using namespace flowsynth;
using namespace flowsynth::testing;

namespace {

std::vector<TokenKind> kinds(std::string_view text) {
  std::vector<TokenKind> out;
  for (const Token& t : tokenize(text)) out.push_back(t.kind);
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::IoError;
}

const ast::Method& only_method(const SourceTree& tree) {
  REQUIRE(tree.methods().size() == 1);
  return tree.get<ast::Method>(tree.methods()[0]);
}

}  // namespace

TEST_CASE("tokenizer: suffix decrement") {
  CHECK(kinds("i--;") ==
        std::vector{TokenKind::Identifier, TokenKind::MinusMinus, TokenKind::Semi, TokenKind::End});
}

TEST_CASE("tokenizer: declaration") {
  const auto tokens = tokenize("int a = 1;");
  REQUIRE(tokens.size() == 6);
  CHECK(tokens[0].is_keyword("int"));
  CHECK(tokens[1].kind == TokenKind::Identifier);
  CHECK(tokens[1].text == "a");
  CHECK(tokens[2].kind == TokenKind::Assign);
  CHECK(tokens[3].kind == TokenKind::IntLiteral);
  CHECK(tokens[3].text == "1");
  CHECK(tokens[4].kind == TokenKind::Semi);
}

TEST_CASE("tokenizer: maximal munch") {
  CHECK(kinds("a +== b") == std::vector{TokenKind::Identifier, TokenKind::PlusAssign, TokenKind::Assign,
                                        TokenKind::Identifier, TokenKind::End});
  CHECK(kinds("a+++b") == std::vector{TokenKind::Identifier, TokenKind::PlusPlus, TokenKind::Plus,
                                      TokenKind::Identifier, TokenKind::End});
  CHECK(kinds("a===b") == std::vector{TokenKind::Identifier, TokenKind::EqualEqual, TokenKind::Assign,
                                      TokenKind::Identifier, TokenKind::End});
}

TEST_CASE("tokenizer: comments, positions, unknown characters") {
  const auto tokens = tokenize("// header\n  x");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].line == 2);
  CHECK(tokens[0].column == 3);
  CHECK(code_of([] { tokenize("int a = 1 @ 2;"); }) == ErrorCode::UnknownCharacter);
  try {
    tokenize("a\n  #");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("2:3") != std::string::npos);
  }
}

TEST_CASE("parser: a +== b is rejected") {
  CHECK(code_of([] { parse_source("void m(int a, int b) { a +== b; }"); }) == ErrorCode::ParseError);
}

TEST_CASE("parser: multiplication binds tighter than addition") {
  const SourceTree tree = parse_source("void m(int a, int b, int c) { a * b + c; }");
  const auto& m = only_method(tree);
  const auto& stmt = tree.get<ast::ExpressionStatement>(m.statements.at(0));
  const auto& add = tree.get<ast::AdditiveExpr>(stmt.expression);
  CHECK(add.op == Operator::Addition);
  CHECK(tree.at(add.left).kind() == SourceKind::MultiplicativeExpr);
  CHECK(tree.at(add.right).kind() == SourceKind::IdentifierReference);
}

TEST_CASE("parser: assignment keeps the lhs reference and rhs expression") {
  const SourceTree tree = parse_source("void m() { int i = 100; i = i - 10; }");
  const auto& m = only_method(tree);
  REQUIRE(m.statements.size() == 2);
  const auto& decl = tree.get<ast::LocalVariableStatement>(m.statements[0]);
  const auto& stmt = tree.get<ast::ExpressionStatement>(m.statements[1]);
  const auto& assign = tree.get<ast::AssignmentExpr>(stmt.expression);
  CHECK(assign.op == Operator::Assignment);
  CHECK(tree.get<ast::IdentifierReference>(assign.child).target == decl.variable);
  const auto& sub = tree.get<ast::AdditiveExpr>(assign.value);
  CHECK(sub.op == Operator::Subtraction);
  CHECK(tree.get<ast::DecimalIntegerLiteral>(sub.right).decimalValue == "10");
}

TEST_CASE("parser: relational and equality levels") {
  const SourceTree tree = parse_source("void m(int a) { a + 1 < 2 == 0; }");
  const auto& stmt = tree.get<ast::ExpressionStatement>(only_method(tree).statements[0]);
  const auto& eq = tree.get<ast::EqualityExpr>(stmt.expression);
  CHECK(tree.at(eq.left).kind() == SourceKind::RelationExpr);
  const auto& rel = tree.get<ast::RelationExpr>(eq.left);
  CHECK(rel.op == Operator::LessThan);
  CHECK(tree.at(rel.left).kind() == SourceKind::AdditiveExpr);
}

TEST_CASE("parser: unsupported constructs") {
  CHECK(code_of([] { parse_source("void m() { for (;;) {} }"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_source("void m() { f(); }"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_source("void m(int a) { 1 = a; }"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_source("void m(int a) { a = 007; }"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_source("void m() { int a = 1 }"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_source("void m() { do { } while (1 > 0); }"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_source("void m() { int a = \"s\"; }"); }) == ErrorCode::UnknownCharacter);
  CHECK(code_of([] { parse_source("void m(int a) { a[0] = 1; }"); }) == ErrorCode::UnknownCharacter);
}

TEST_CASE("parser: name and label resolution") {
  CHECK(code_of([] { parse_source("void m() { x = 1; }"); }) == ErrorCode::UnresolvedName);
  CHECK(code_of([] { parse_source("void m() { { int a = 1; } a = 2; }"); }) == ErrorCode::UnresolvedName);
  CHECK(code_of([] { parse_source("void m() { while (1 > 0) break L; }"); }) == ErrorCode::UnresolvedLabel);
  CHECK(code_of([] { parse_source("void m() { L: { } break L; }"); }) == ErrorCode::UnresolvedLabel);
}

TEST_CASE("parser: innermost declaration wins") {
  const SourceTree tree = parse_source("void m(int a) { { int a = 1; a = 2; } a = 3; }");
  const auto& m = only_method(tree);
  const NodeId param = m.parameters.at(0);
  const auto& block = tree.get<ast::Block>(m.statements.at(0));
  const NodeId local = tree.get<ast::LocalVariableStatement>(block.statements.at(0)).variable;
  auto target_of = [&](NodeId stmt) {
    const auto& assign = tree.get<ast::AssignmentExpr>(tree.get<ast::ExpressionStatement>(stmt).expression);
    return tree.get<ast::IdentifierReference>(assign.child).target;
  };
  CHECK(target_of(block.statements.at(1)) == local);
  CHECK(target_of(m.statements.at(1)) == param);
}

TEST_CASE("parser: labeled jumps resolve to the enclosing label") {
  const SourceTree tree = parse_source("void m() { outer: while (1 > 0) { continue outer; } }");
  const auto& m = only_method(tree);
  const NodeId label = m.statements.at(0);
  const auto& loop = tree.get<ast::WhileLoop>(tree.get<ast::JumpLabel>(label).statement);
  const auto& body = tree.get<ast::Block>(loop.statement);
  CHECK(tree.get<ast::Continue>(body.statements.at(0)).target == label);
}

TEST_CASE("parser: class wrapper and modifiers") {
  const SourceTree tree = parse_source(read_text(fixture("Test0.java")));
  const auto& m = only_method(tree);
  CHECK(m.name == "testMethod");
  CHECK(m.statements.size() == 5);
  const SourceTree two = parse_source("public class C { public static void a() {} void b(int x, int y) {} }");
  REQUIRE(two.methods().size() == 2);
  CHECK(two.get<ast::Method>(two.methods()[1]).parameters.size() == 2);
}

TEST_CASE("parser: prefix operators collect into one unary expression") {
  const SourceTree tree = parse_source("void m(int a) { a = - -a; }");
  const auto& stmt = tree.get<ast::ExpressionStatement>(only_method(tree).statements[0]);
  const auto& unary = tree.get<ast::UnaryExpr>(tree.get<ast::AssignmentExpr>(stmt.expression).value);
  CHECK(unary.operators == std::vector{Operator::Subtraction, Operator::Subtraction});
}

TEST_CASE("containment closure is pre-order and skips references") {
  const SourceTree tree = parse_source("void m(int a) { a = a + 1; }");
  const auto closure = containment_closure(tree, tree.methods()[0]);
  std::vector<SourceKind> ks;
  for (NodeId id : closure) ks.push_back(tree.at(id).kind());
  CHECK(ks == std::vector{SourceKind::Method, SourceKind::Parameter, SourceKind::PrimitiveType,
                          SourceKind::ExpressionStatement, SourceKind::AssignmentExpr,
                          SourceKind::IdentifierReference, SourceKind::AdditiveExpr,
                          SourceKind::IdentifierReference, SourceKind::DecimalIntegerLiteral});
}

TEST_CASE("ast json: round trip over fixtures") {
  for (const char* name : {"Test0.java", "Test4.java", "Labels.java"}) {
    CAPTURE(name);
    const SourceTree tree = parse_source(read_text(fixture(name)));
    const SourceTree back = parse_ast_json(dump_ast_json(tree));
    CHECK(structurally_equal(tree, back));
    CHECK(dump_ast_json(back) == dump_ast_json(tree));
  }
}

TEST_CASE("ast json: round trip over generated programs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CAPTURE(seed);
    const SourceTree tree = parse_source(generate_program(seed));
    CHECK(structurally_equal(tree, parse_ast_json(dump_ast_json(tree, -1))));
  }
}

TEST_CASE("ast json: structural equality notices differences") {
  const SourceTree a = parse_source("void m(int a) { a = 1; }");
  const SourceTree b = parse_source("void m(int a) { a = 2; }");
  const SourceTree c = parse_source("void m(int a, int b) { a = 1; }");
  CHECK_FALSE(structurally_equal(a, b));
  CHECK_FALSE(structurally_equal(a, c));
}

TEST_CASE("ast json: sparse ids are accepted") {
  const SourceTree tree = parse_ast_json(R"({
    "nodes": [
      {"id": 10, "kind": "Method", "name": "m", "parameters": [], "statements": [30]},
      {"id": 30, "kind": "Return", "returnValue": null}
    ],
    "methods": [10]})");
  REQUIRE(tree.size() == 2);
  CHECK(only_method(tree).name == "m");
}

TEST_CASE("ast json: malformed documents") {
  CHECK(code_of([] { parse_ast_json("[1, 2]"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_ast_json("{\"nodes\": [{\"id\": 0, \"kind\": \"Banana\"}], \"methods\": []}"); }) ==
        ErrorCode::SchemaError);
  CHECK(code_of([] {
          parse_ast_json(R"({"nodes": [{"id": 0, "kind": "Method", "name": "m", "parameters": [],
                             "statements": [7]}], "methods": [0]})");
        }) == ErrorCode::DanglingReference);
  try {
    parse_ast_json(R"({"nodes": [{"id": 0, "kind": "Method", "name": 5, "parameters": [],
                       "statements": []}], "methods": [0]})");
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(std::string(e.what()).find("$.nodes[0].name") != std::string::npos);
  }
}

TEST_CASE("ast json: references must point at declarations") {
  const char* doc = R"({"nodes": [
      {"id": 0, "kind": "Method", "name": "m", "parameters": [], "statements": [1]},
      {"id": 1, "kind": "ExpressionStatement", "expression": 2},
      {"id": 2, "kind": "IdentifierReference", "target": 1}
    ], "methods": [0]})";
  CHECK(code_of([&] { parse_ast_json(doc); }) == ErrorCode::SchemaError);
}
