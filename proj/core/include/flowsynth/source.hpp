#pragma once

// Source-level AST for the supported Java subset. Nodes live in an arena
// (SourceTree) and refer to each other by NodeId; containment children and
// cross references (identifier targets, jump targets) are both plain ids.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace flowsynth {

using NodeId = std::uint32_t;

enum class SourceKind {
  Method,
  Parameter,
  LocalVariableStatement,
  LocalVariable,
  ExpressionStatement,
  Condition,
  WhileLoop,
  Block,
  JumpLabel,
  Break,
  Continue,
  Return,
  AssignmentExpr,
  AdditiveExpr,
  MultiplicativeExpr,
  EqualityExpr,
  RelationExpr,
  UnaryExpr,
  SuffixUnaryModificationExpr,
  IdentifierReference,
  DecimalIntegerLiteral,
  PrimitiveType,
};

inline constexpr std::size_t kSourceKindCount = 22;

std::string_view source_kind_name(SourceKind kind);
std::optional<SourceKind> source_kind_from_name(std::string_view name);

bool is_statement(SourceKind kind);
bool is_expression(SourceKind kind);

enum class Operator {
  Multiplication,
  Subtraction,
  Addition,
  Division,
  LessThan,
  GreaterThan,
  Assignment,
  MinusMinus,
  PlusPlus,
  AssignmentPlus,
  Equal,
};

std::string_view operator_name(Operator op);
std::optional<Operator> operator_from_name(std::string_view name);

enum class PrimitiveTypeName { Int, Boolean, Long, Short, Byte, Char, Float, Double, Void };

std::string_view primitive_type_name(PrimitiveTypeName type);
std::optional<PrimitiveTypeName> primitive_type_from_name(std::string_view name);

struct SourceLocation {
  int line = 0;
  int column = 0;
};

namespace ast {

struct Method {
  std::string name;
  std::vector<NodeId> parameters;
  std::vector<NodeId> statements;
};

struct Parameter {
  std::string name;
  NodeId typeRef = 0;
};

struct LocalVariableStatement {
  NodeId variable = 0;
};

struct LocalVariable {
  std::string name;
  NodeId typeRef = 0;
  std::optional<NodeId> initialValue;
};

struct ExpressionStatement {
  NodeId expression = 0;
};

struct Condition {
  NodeId condition = 0;
  NodeId statement = 0;
  std::optional<NodeId> elseStatement;
};

struct WhileLoop {
  NodeId condition = 0;
  NodeId statement = 0;
};

struct Block {
  std::vector<NodeId> statements;
};

struct JumpLabel {
  std::string name;
  NodeId statement = 0;
};

struct Break {
  std::optional<NodeId> target;
};

struct Continue {
  std::optional<NodeId> target;
};

struct Return {
  std::optional<NodeId> returnValue;
};

template <SourceKind K>
struct BinaryExpr {
  static constexpr SourceKind kind = K;
  NodeId left = 0;
  NodeId right = 0;
  Operator op = Operator::Addition;
};

using AdditiveExpr = BinaryExpr<SourceKind::AdditiveExpr>;
using MultiplicativeExpr = BinaryExpr<SourceKind::MultiplicativeExpr>;
using EqualityExpr = BinaryExpr<SourceKind::EqualityExpr>;
using RelationExpr = BinaryExpr<SourceKind::RelationExpr>;

// child = the assigned variable reference, value = right-hand side.
struct AssignmentExpr {
  NodeId child = 0;
  NodeId value = 0;
  Operator op = Operator::Assignment;
};

struct UnaryExpr {
  std::vector<Operator> operators;
  NodeId child = 0;
};

struct SuffixUnaryModificationExpr {
  NodeId child = 0;
  Operator op = Operator::PlusPlus;
};

struct IdentifierReference {
  NodeId target = 0;
};

struct DecimalIntegerLiteral {
  std::string decimalValue;  // base-10 digits, no sign, no leading zeros
};

struct PrimitiveType {
  PrimitiveTypeName type = PrimitiveTypeName::Int;
};

}  // namespace ast

// Alternative order must match SourceKind.
using SourcePayload = std::variant<
    ast::Method, ast::Parameter, ast::LocalVariableStatement, ast::LocalVariable,
    ast::ExpressionStatement, ast::Condition, ast::WhileLoop, ast::Block, ast::JumpLabel,
    ast::Break, ast::Continue, ast::Return, ast::AssignmentExpr, ast::AdditiveExpr,
    ast::MultiplicativeExpr, ast::EqualityExpr, ast::RelationExpr, ast::UnaryExpr,
    ast::SuffixUnaryModificationExpr, ast::IdentifierReference, ast::DecimalIntegerLiteral,
    ast::PrimitiveType>;

static_assert(std::variant_size_v<SourcePayload> == kSourceKindCount);

struct SourceNode {
  NodeId id = 0;
  SourcePayload payload;
  SourceLocation location;

  SourceKind kind() const { return static_cast<SourceKind>(payload.index()); }
};

/// Arena holding one compilation unit. Node ids are dense indices.
class SourceTree {
 public:
  NodeId add(SourcePayload payload, SourceLocation location = {});

  const SourceNode& at(NodeId id) const;
  SourceNode& at(NodeId id);
  bool contains(NodeId id) const { return id < nodes_.size(); }
  std::size_t size() const { return nodes_.size(); }

  template <class T>
  const T& get(NodeId id) const;
  template <class T>
  T& get(NodeId id);

  const std::vector<NodeId>& methods() const { return methods_; }
  void add_method(NodeId id) { methods_.push_back(id); }

  const std::vector<SourceNode>& nodes() const { return nodes_; }

 private:
  std::vector<SourceNode> nodes_;
  std::vector<NodeId> methods_;
};

/// Containment children in document order. Cross references
/// (IdentifierReference.target, Break/Continue.target) are not included.
std::vector<NodeId> containment_children(const SourceTree& tree, NodeId id);

/// Reflexive-transitive containment closure in depth-first pre-order.
std::vector<NodeId> containment_closure(const SourceTree& tree, NodeId id);

/// Structural equality of two trees, compared from their method lists.
/// Node ids may differ; reference links must point at corresponding nodes.
bool structurally_equal(const SourceTree& a, const SourceTree& b);

}  // namespace flowsynth

#include "flowsynth/source_inl.hpp"
