#include "flowsynth/source.hpp"

#include <array>
#include <unordered_map>

namespace flowsynth {

namespace {

constexpr std::array<std::string_view, kSourceKindCount> kKindNames = {
    "Method",
    "Parameter",
    "LocalVariableStatement",
    "LocalVariable",
    "ExpressionStatement",
    "Condition",
    "WhileLoop",
    "Block",
    "JumpLabel",
    "Break",
    "Continue",
    "Return",
    "AssignmentExpr",
    "AdditiveExpr",
    "MultiplicativeExpr",
    "EqualityExpr",
    "RelationExpr",
    "UnaryExpr",
    "SuffixUnaryModificationExpr",
    "IdentifierReference",
    "DecimalIntegerLiteral",
    "PrimitiveType",
};

constexpr std::array<std::string_view, 11> kOperatorNames = {
    "Multiplication", "Subtraction", "Addition",  "Division",       "LessThan", "GreaterThan",
    "Assignment",     "MinusMinus",  "PlusPlus", "AssignmentPlus", "Equal",
};

constexpr std::array<std::string_view, 9> kPrimitiveNames = {
    "int", "boolean", "long", "short", "byte", "char", "float", "double", "void",
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void push_optional(std::vector<NodeId>& out, const std::optional<NodeId>& id) {
  if (id) out.push_back(*id);
}

// Scalar content, containment children and cross references of one node.
struct NodeShape {
  std::string scalars;
  std::vector<NodeId> children;
  std::vector<std::optional<NodeId>> refs;
};

std::string ops_text(const std::vector<Operator>& ops) {
  std::string out;
  for (auto op : ops) {
    out += operator_name(op);
    out += ',';
  }
  return out;
}

NodeShape describe(const SourceTree& tree, NodeId id) {
  NodeShape shape;
  shape.children = containment_children(tree, id);
  const SourceNode& node = tree.at(id);
  shape.scalars = std::string(source_kind_name(node.kind())) + "|";
  std::visit(Overloaded{
                 [&](const ast::Method& m) { shape.scalars += m.name + "|" + std::to_string(m.parameters.size()); },
                 [&](const ast::Parameter& p) { shape.scalars += p.name; },
                 [&](const ast::LocalVariable& v) {
                   shape.scalars += v.name + (v.initialValue ? "|init" : "|noinit");
                 },
                 [&](const ast::Condition& c) { shape.scalars += c.elseStatement ? "else" : "noelse"; },
                 [&](const ast::JumpLabel& l) { shape.scalars += l.name; },
                 [&](const ast::Break& b) { shape.refs.push_back(b.target); },
                 [&](const ast::Continue& c) { shape.refs.push_back(c.target); },
                 [&](const ast::Return& r) { shape.scalars += r.returnValue ? "value" : "novalue"; },
                 [&](const ast::AssignmentExpr& e) { shape.scalars += operator_name(e.op); },
                 [&](const ast::UnaryExpr& e) { shape.scalars += ops_text(e.operators); },
                 [&](const ast::SuffixUnaryModificationExpr& e) { shape.scalars += operator_name(e.op); },
                 [&](const ast::IdentifierReference& r) { shape.refs.push_back(r.target); },
                 [&](const ast::DecimalIntegerLiteral& l) { shape.scalars += l.decimalValue; },
                 [&](const ast::PrimitiveType& t) { shape.scalars += primitive_type_name(t.type); },
                 [&]<SourceKind K>(const ast::BinaryExpr<K>& e) { shape.scalars += operator_name(e.op); },
                 [&](const auto&) {},
             },
             node.payload);
  return shape;
}

}  // namespace

std::string_view source_kind_name(SourceKind kind) {
  return kKindNames.at(static_cast<std::size_t>(kind));
}

std::optional<SourceKind> source_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<SourceKind>(i);
  }
  return std::nullopt;
}

bool is_statement(SourceKind kind) {
  switch (kind) {
    case SourceKind::LocalVariableStatement:
    case SourceKind::ExpressionStatement:
    case SourceKind::Condition:
    case SourceKind::WhileLoop:
    case SourceKind::Block:
    case SourceKind::JumpLabel:
    case SourceKind::Break:
    case SourceKind::Continue:
    case SourceKind::Return:
      return true;
    default:
      return false;
  }
}

bool is_expression(SourceKind kind) {
  switch (kind) {
    case SourceKind::AssignmentExpr:
    case SourceKind::AdditiveExpr:
    case SourceKind::MultiplicativeExpr:
    case SourceKind::EqualityExpr:
    case SourceKind::RelationExpr:
    case SourceKind::UnaryExpr:
    case SourceKind::SuffixUnaryModificationExpr:
    case SourceKind::IdentifierReference:
    case SourceKind::DecimalIntegerLiteral:
      return true;
    default:
      return false;
  }
}

std::string_view operator_name(Operator op) {
  return kOperatorNames.at(static_cast<std::size_t>(op));
}

std::optional<Operator> operator_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kOperatorNames.size(); ++i) {
    if (kOperatorNames[i] == name) return static_cast<Operator>(i);
  }
  return std::nullopt;
}

std::string_view primitive_type_name(PrimitiveTypeName type) {
  return kPrimitiveNames.at(static_cast<std::size_t>(type));
}

std::optional<PrimitiveTypeName> primitive_type_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kPrimitiveNames.size(); ++i) {
    if (kPrimitiveNames[i] == name) return static_cast<PrimitiveTypeName>(i);
  }
  return std::nullopt;
}

NodeId SourceTree::add(SourcePayload payload, SourceLocation location) {
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(SourceNode{id, std::move(payload), location});
  return id;
}

const SourceNode& SourceTree::at(NodeId id) const {
  if (!contains(id)) {
    throw Error(ErrorCode::UnknownId, "source node " + std::to_string(id));
  }
  return nodes_[id];
}

SourceNode& SourceTree::at(NodeId id) {
  return const_cast<SourceNode&>(std::as_const(*this).at(id));
}

std::vector<NodeId> containment_children(const SourceTree& tree, NodeId id) {
  std::vector<NodeId> out;
  std::visit(Overloaded{
                 [&](const ast::Method& m) {
                   out = m.parameters;
                   out.insert(out.end(), m.statements.begin(), m.statements.end());
                 },
                 [&](const ast::Parameter& p) { out.push_back(p.typeRef); },
                 [&](const ast::LocalVariableStatement& s) { out.push_back(s.variable); },
                 [&](const ast::LocalVariable& v) {
                   out.push_back(v.typeRef);
                   push_optional(out, v.initialValue);
                 },
                 [&](const ast::ExpressionStatement& s) { out.push_back(s.expression); },
                 [&](const ast::Condition& c) {
                   out.push_back(c.condition);
                   out.push_back(c.statement);
                   push_optional(out, c.elseStatement);
                 },
                 [&](const ast::WhileLoop& w) {
                   out.push_back(w.condition);
                   out.push_back(w.statement);
                 },
                 [&](const ast::Block& b) { out = b.statements; },
                 [&](const ast::JumpLabel& l) { out.push_back(l.statement); },
                 [&](const ast::Return& r) { push_optional(out, r.returnValue); },
                 [&](const ast::AssignmentExpr& e) {
                   out.push_back(e.child);
                   out.push_back(e.value);
                 },
                 [&]<SourceKind K>(const ast::BinaryExpr<K>& e) {
                   out.push_back(e.left);
                   out.push_back(e.right);
                 },
                 [&](const ast::UnaryExpr& e) { out.push_back(e.child); },
                 [&](const ast::SuffixUnaryModificationExpr& e) { out.push_back(e.child); },
                 [&](const auto&) {},
             },
             tree.at(id).payload);
  return out;
}

std::vector<NodeId> containment_closure(const SourceTree& tree, NodeId id) {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    const NodeId current = stack.back();
    stack.pop_back();
    out.push_back(current);
    auto children = containment_children(tree, current);
    stack.insert(stack.end(), children.rbegin(), children.rend());
  }
  return out;
}

bool structurally_equal(const SourceTree& a, const SourceTree& b) {
  if (a.methods().size() != b.methods().size()) return false;

  std::unordered_map<NodeId, NodeId> mapping;
  std::vector<std::pair<std::optional<NodeId>, std::optional<NodeId>>> refs;
  std::vector<std::pair<NodeId, NodeId>> stack;
  for (std::size_t i = 0; i < a.methods().size(); ++i) {
    stack.emplace_back(a.methods()[i], b.methods()[i]);
  }

  while (!stack.empty()) {
    auto [ia, ib] = stack.back();
    stack.pop_back();
    if (!mapping.emplace(ia, ib).second) return false;
    NodeShape sa = describe(a, ia);
    NodeShape sb = describe(b, ib);
    if (sa.scalars != sb.scalars || sa.children.size() != sb.children.size() ||
        sa.refs.size() != sb.refs.size()) {
      return false;
    }
    for (std::size_t i = 0; i < sa.children.size(); ++i) {
      stack.emplace_back(sa.children[i], sb.children[i]);
    }
    for (std::size_t i = 0; i < sa.refs.size(); ++i) refs.emplace_back(sa.refs[i], sb.refs[i]);
  }

  for (const auto& [ra, rb] : refs) {
    if (ra.has_value() != rb.has_value()) return false;
    if (!ra) continue;
    auto it = mapping.find(*ra);
    if (it == mapping.end() || it->second != *rb) return false;
  }
  return true;
}

}  // namespace flowsynth
