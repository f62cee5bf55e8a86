#include "flowsynth/parser.hpp"

#include <string>
#include <string_view>
#include <utility>

#include "flowsynth/errors.hpp"

namespace flowsynth {

namespace {

// Java reserved words outside the supported subset. They lex as identifiers
// and would otherwise surface as unresolved names.
bool unsupported_reserved(std::string_view word) {
  static constexpr std::string_view kWords[] = {
      "abstract", "assert", "case", "catch", "const", "default", "do", "enum", "extends", "final",
      "finally", "for", "goto", "implements", "import", "instanceof", "interface", "native", "new",
      "package", "private", "protected", "super", "switch", "synchronized", "this", "throw",
      "throws", "transient", "try", "volatile", "true", "false", "null"};
  for (std::string_view w : kWords) {
    if (w == word) return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  SourceTree run() {
    skip_modifiers();
    if (peek().is_keyword("class")) {
      next();
      expect(TokenKind::Identifier, "class name");
      expect(TokenKind::LBrace, "'{'");
      while (peek().kind != TokenKind::RBrace) tree_.add_method(parse_method());
      next();
    } else {
      while (peek().kind != TokenKind::End) tree_.add_method(parse_method());
    }
    expect(TokenKind::End, "end of input");
    return std::move(tree_);
  }

 private:
  // ---- token helpers --------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t index = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[index];
  }

  const Token& next() {
    const Token& tok = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return tok;
  }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }

  const Token& expect(TokenKind kind, std::string_view expected) {
    if (peek().kind != kind) fail(expected);
    return next();
  }

  [[noreturn]] void fail(std::string_view expected) const {
    const Token& tok = peek();
    std::string found = tok.kind == TokenKind::End ? "end of input" : "'" + tok.text + "'";
    throw Error(ErrorCode::ParseError, std::to_string(tok.line) + ":" + std::to_string(tok.column) +
                                           ": expected " + std::string(expected) + ", found " +
                                           found);
  }

  static SourceLocation loc(const Token& tok) { return {tok.line, tok.column}; }

  void skip_modifiers() {
    while (peek().is_keyword("public") || peek().is_keyword("static")) next();
  }

  std::optional<PrimitiveTypeName> peek_type() const {
    if (peek().kind != TokenKind::Keyword) return std::nullopt;
    return primitive_type_from_name(peek().text);
  }

  NodeId parse_type(bool allow_void) {
    const Token& tok = peek();
    auto type = peek_type();
    if (!type || (!allow_void && *type == PrimitiveTypeName::Void)) fail("primitive type");
    next();
    return tree_.add(ast::PrimitiveType{*type}, loc(tok));
  }

  // ---- scopes ---------------------------------------------------------

  void push_scope() { scopes_.emplace_back(); }
  void pop_scope() { scopes_.pop_back(); }

  void declare(const std::string& name, NodeId id) { scopes_.back().emplace_back(name, id); }

  NodeId resolve_name(const Token& tok) const {
    for (auto scope = scopes_.rbegin(); scope != scopes_.rend(); ++scope) {
      for (auto entry = scope->rbegin(); entry != scope->rend(); ++entry) {
        if (entry->first == tok.text) return entry->second;
      }
    }
    throw Error(ErrorCode::UnresolvedName, "'" + tok.text + "' at " + std::to_string(tok.line) +
                                               ":" + std::to_string(tok.column));
  }

  NodeId resolve_label(const Token& tok) const {
    for (auto it = labels_.rbegin(); it != labels_.rend(); ++it) {
      if (it->first == tok.text) return it->second;
    }
    throw Error(ErrorCode::UnresolvedLabel, "'" + tok.text + "' at " + std::to_string(tok.line) +
                                                ":" + std::to_string(tok.column));
  }

  // ---- declarations ---------------------------------------------------

  NodeId parse_method() {
    skip_modifiers();
    const Token& start = peek();
    parse_type(/*allow_void=*/true);
    const Token& name = expect(TokenKind::Identifier, "method name");
    const NodeId method = tree_.add(ast::Method{name.text, {}, {}}, loc(start));

    push_scope();
    expect(TokenKind::LParen, "'('");
    std::vector<NodeId> params;
    if (peek().kind != TokenKind::RParen) {
      do {
        const Token& ptok = peek();
        const NodeId type = parse_type(/*allow_void=*/false);
        const Token& pname = expect(TokenKind::Identifier, "parameter name");
        const NodeId param = tree_.add(ast::Parameter{pname.text, type}, loc(ptok));
        declare(pname.text, param);
        params.push_back(param);
      } while (accept(TokenKind::Comma));
    }
    expect(TokenKind::RParen, "')'");
    expect(TokenKind::LBrace, "'{'");
    std::vector<NodeId> stmts;
    while (peek().kind != TokenKind::RBrace) stmts.push_back(parse_statement());
    next();
    pop_scope();

    auto& m = tree_.get<ast::Method>(method);
    m.parameters = std::move(params);
    m.statements = std::move(stmts);
    return method;
  }

  // ---- statements -----------------------------------------------------

  NodeId parse_statement() {
    const Token& tok = peek();
    if (tok.kind == TokenKind::LBrace) return parse_block();
    if (tok.kind == TokenKind::Keyword) {
      if (tok.text == "if") return parse_condition();
      if (tok.text == "while") return parse_while();
      if (tok.text == "break" || tok.text == "continue") return parse_jump();
      if (tok.text == "return") return parse_return();
      if (peek_type()) return parse_local_variable_statement();
      fail("statement");
    }
    if (tok.kind == TokenKind::Identifier && peek(1).kind == TokenKind::Colon) return parse_label();

    const NodeId expr = parse_expression();
    expect(TokenKind::Semi, "';'");
    return tree_.add(ast::ExpressionStatement{expr}, loc(tok));
  }

  // A nested statement (if/while/label body) gets its own scope.
  NodeId parse_sub_statement() {
    push_scope();
    const NodeId stmt = parse_statement();
    pop_scope();
    return stmt;
  }

  NodeId parse_block() {
    const Token& start = expect(TokenKind::LBrace, "'{'");
    push_scope();
    std::vector<NodeId> stmts;
    while (peek().kind != TokenKind::RBrace) {
      if (peek().kind == TokenKind::End) fail("'}'");
      stmts.push_back(parse_statement());
    }
    next();
    pop_scope();
    return tree_.add(ast::Block{std::move(stmts)}, loc(start));
  }

  NodeId parse_condition() {
    const Token& start = next();
    expect(TokenKind::LParen, "'('");
    const NodeId cond = parse_expression();
    expect(TokenKind::RParen, "')'");
    const NodeId then_stmt = parse_sub_statement();
    std::optional<NodeId> else_stmt;
    if (peek().is_keyword("else")) {
      next();
      else_stmt = parse_sub_statement();
    }
    return tree_.add(ast::Condition{cond, then_stmt, else_stmt}, loc(start));
  }

  NodeId parse_while() {
    const Token& start = next();
    expect(TokenKind::LParen, "'('");
    const NodeId cond = parse_expression();
    expect(TokenKind::RParen, "')'");
    const NodeId body = parse_sub_statement();
    return tree_.add(ast::WhileLoop{cond, body}, loc(start));
  }

  NodeId parse_label() {
    const Token& name = next();
    next();  // ':'
    const NodeId label = tree_.add(ast::JumpLabel{name.text, 0}, loc(name));
    labels_.emplace_back(name.text, label);
    const NodeId stmt = parse_sub_statement();
    labels_.pop_back();
    tree_.get<ast::JumpLabel>(label).statement = stmt;
    return label;
  }

  NodeId parse_jump() {
    const Token& start = next();
    std::optional<NodeId> target;
    if (peek().kind == TokenKind::Identifier) target = resolve_label(next());
    expect(TokenKind::Semi, "';'");
    if (start.text == "break") return tree_.add(ast::Break{target}, loc(start));
    return tree_.add(ast::Continue{target}, loc(start));
  }

  NodeId parse_return() {
    const Token& start = next();
    std::optional<NodeId> value;
    if (peek().kind != TokenKind::Semi) value = parse_expression();
    expect(TokenKind::Semi, "';'");
    return tree_.add(ast::Return{value}, loc(start));
  }

  NodeId parse_local_variable_statement() {
    const Token& start = peek();
    const NodeId type = parse_type(/*allow_void=*/false);
    const Token& name = expect(TokenKind::Identifier, "variable name");
    std::optional<NodeId> init;
    if (accept(TokenKind::Assign)) init = parse_expression();
    expect(TokenKind::Semi, "';'");
    const NodeId var = tree_.add(ast::LocalVariable{name.text, type, init}, loc(name));
    declare(name.text, var);
    return tree_.add(ast::LocalVariableStatement{var}, loc(start));
  }

  // ---- expressions ----------------------------------------------------

  NodeId parse_expression() { return parse_assignment(); }

  NodeId parse_assignment() {
    const Token& start = peek();
    const NodeId lhs = parse_equality();
    Operator op;
    if (peek().kind == TokenKind::Assign) {
      op = Operator::Assignment;
    } else if (peek().kind == TokenKind::PlusAssign) {
      op = Operator::AssignmentPlus;
    } else {
      return lhs;
    }
    if (tree_.at(lhs).kind() != SourceKind::IdentifierReference) {
      throw Error(ErrorCode::ParseError, std::to_string(start.line) + ":" +
                                             std::to_string(start.column) +
                                             ": left-hand side of assignment must be an identifier");
    }
    next();
    const NodeId rhs = parse_assignment();
    return tree_.add(ast::AssignmentExpr{lhs, rhs, op}, loc(start));
  }

  template <class Node, class OpFor, class Next>
  NodeId parse_left_assoc(OpFor op_for, Next next_level) {
    const Token& start = peek();
    NodeId left = (this->*next_level)();
    while (auto op = op_for(peek().kind)) {
      next();
      const NodeId right = (this->*next_level)();
      left = tree_.add(Node{left, right, *op}, loc(start));
    }
    return left;
  }

  NodeId parse_equality() {
    return parse_left_assoc<ast::EqualityExpr>(
        [](TokenKind k) -> std::optional<Operator> {
          if (k == TokenKind::EqualEqual) return Operator::Equal;
          return std::nullopt;
        },
        &Parser::parse_relational);
  }

  NodeId parse_relational() {
    return parse_left_assoc<ast::RelationExpr>(
        [](TokenKind k) -> std::optional<Operator> {
          if (k == TokenKind::Less) return Operator::LessThan;
          if (k == TokenKind::Greater) return Operator::GreaterThan;
          return std::nullopt;
        },
        &Parser::parse_additive);
  }

  NodeId parse_additive() {
    return parse_left_assoc<ast::AdditiveExpr>(
        [](TokenKind k) -> std::optional<Operator> {
          if (k == TokenKind::Plus) return Operator::Addition;
          if (k == TokenKind::Minus) return Operator::Subtraction;
          return std::nullopt;
        },
        &Parser::parse_multiplicative);
  }

  NodeId parse_multiplicative() {
    return parse_left_assoc<ast::MultiplicativeExpr>(
        [](TokenKind k) -> std::optional<Operator> {
          if (k == TokenKind::Star) return Operator::Multiplication;
          if (k == TokenKind::Slash) return Operator::Division;
          return std::nullopt;
        },
        &Parser::parse_unary);
  }

  NodeId parse_unary() {
    const Token& start = peek();
    std::vector<Operator> ops;
    while (peek().kind == TokenKind::Minus || peek().kind == TokenKind::Plus) {
      ops.push_back(next().kind == TokenKind::Minus ? Operator::Subtraction : Operator::Addition);
    }
    const NodeId operand = parse_suffix();
    if (ops.empty()) return operand;
    return tree_.add(ast::UnaryExpr{std::move(ops), operand}, loc(start));
  }

  NodeId parse_suffix() {
    const Token& start = peek();
    const NodeId operand = parse_primary();
    if (peek().kind != TokenKind::MinusMinus && peek().kind != TokenKind::PlusPlus) return operand;
    if (tree_.at(operand).kind() != SourceKind::IdentifierReference) {
      fail("';' (suffix operator requires an identifier)");
    }
    const Operator op =
        next().kind == TokenKind::MinusMinus ? Operator::MinusMinus : Operator::PlusPlus;
    return tree_.add(ast::SuffixUnaryModificationExpr{operand, op}, loc(start));
  }

  NodeId parse_primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Identifier: {
        if (unsupported_reserved(tok.text)) fail("a supported statement or expression");
        next();
        // Calls, and for/do/switch headers, which lex as identifiers.
        if (peek().kind == TokenKind::LParen) fail("an operator; calls are not supported");
        return tree_.add(ast::IdentifierReference{resolve_name(tok)}, loc(tok));
      }
      case TokenKind::IntLiteral: {
        if (tok.text.size() > 1 && tok.text.front() == '0') fail("decimal literal without leading zero");
        next();
        return tree_.add(ast::DecimalIntegerLiteral{tok.text}, loc(tok));
      }
      case TokenKind::LParen: {
        next();
        const NodeId inner = parse_expression();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      default:
        fail("expression");
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  SourceTree tree_;
  std::vector<std::vector<std::pair<std::string, NodeId>>> scopes_;
  std::vector<std::pair<std::string, NodeId>> labels_;
};

class TreeValidator {
 public:
  explicit TreeValidator(const SourceTree& tree) : tree_(tree) {}

  void run() {
    for (NodeId method : tree_.methods()) {
      if (tree_.at(method).kind() != SourceKind::Method) {
        throw Error(ErrorCode::SchemaError, "methods[] entry " + std::to_string(method) +
                                                " is not a Method");
      }
      visit(method);
    }
  }

 private:
  void visit(NodeId id) {
    const SourceNode& node = tree_.at(id);
    switch (node.kind()) {
      case SourceKind::Method: {
        const auto& m = tree_.get<ast::Method>(id);
        scopes_.emplace_back();
        for (NodeId p : m.parameters) {
          visit(p);
          scopes_.back().push_back(p);
        }
        for (NodeId s : m.statements) visit(s);
        scopes_.pop_back();
        return;
      }
      case SourceKind::Block: {
        scopes_.emplace_back();
        for (NodeId s : tree_.get<ast::Block>(id).statements) visit(s);
        scopes_.pop_back();
        return;
      }
      case SourceKind::LocalVariableStatement: {
        const NodeId var = tree_.get<ast::LocalVariableStatement>(id).variable;
        visit(var);
        scopes_.back().push_back(var);
        return;
      }
      case SourceKind::Condition: {
        const auto& c = tree_.get<ast::Condition>(id);
        visit(c.condition);
        visit_scoped(c.statement);
        if (c.elseStatement) visit_scoped(*c.elseStatement);
        return;
      }
      case SourceKind::WhileLoop: {
        const auto& w = tree_.get<ast::WhileLoop>(id);
        visit(w.condition);
        visit_scoped(w.statement);
        return;
      }
      case SourceKind::JumpLabel: {
        labels_.push_back(id);
        visit_scoped(tree_.get<ast::JumpLabel>(id).statement);
        labels_.pop_back();
        return;
      }
      case SourceKind::Break:
        check_label(tree_.get<ast::Break>(id).target, id);
        return;
      case SourceKind::Continue:
        check_label(tree_.get<ast::Continue>(id).target, id);
        return;
      case SourceKind::IdentifierReference: {
        const NodeId target = tree_.get<ast::IdentifierReference>(id).target;
        for (const auto& scope : scopes_) {
          for (NodeId decl : scope) {
            if (decl == target) return;
          }
        }
        throw Error(ErrorCode::UnresolvedName,
                    "identifier reference " + std::to_string(id) + " targets node " +
                        std::to_string(target) + " which is not a visible declaration");
      }
      default:
        for (NodeId child : containment_children(tree_, id)) visit(child);
        return;
    }
  }

  void visit_scoped(NodeId id) {
    scopes_.emplace_back();
    visit(id);
    scopes_.pop_back();
  }

  void check_label(const std::optional<NodeId>& target, NodeId jump) const {
    if (!target) return;
    for (NodeId label : labels_) {
      if (label == *target) return;
    }
    throw Error(ErrorCode::UnresolvedLabel, "jump " + std::to_string(jump) + " targets node " +
                                                std::to_string(*target) +
                                                " which is not an enclosing label");
  }

  const SourceTree& tree_;
  std::vector<std::vector<NodeId>> scopes_;
  std::vector<NodeId> labels_;
};

}  // namespace

SourceTree parse_unit(const std::vector<Token>& tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::End) {
    throw Error(ErrorCode::ParseError, "token stream must end with an End token");
  }
  SourceTree tree = Parser(tokens).run();
  validate_tree(tree);
  return tree;
}

SourceTree parse_source(std::string_view source) { return parse_unit(tokenize(source)); }

void validate_tree(const SourceTree& tree) { TreeValidator(tree).run(); }

}  // namespace flowsynth
