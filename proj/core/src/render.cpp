#include "flowsynth/render.hpp"

#include "flowsynth/errors.hpp"

namespace flowsynth {

std::string_view operator_text(Operator op) {
  switch (op) {
    case Operator::Multiplication: return "*";
    case Operator::Subtraction: return "-";
    case Operator::Addition: return "+";
    case Operator::Division: return "/";
    case Operator::LessThan: return "<";
    case Operator::GreaterThan: return ">";
    case Operator::Assignment: return "=";
    case Operator::MinusMinus: return "--";
    case Operator::PlusPlus: return "++";
    case Operator::AssignmentPlus: return "+=";
    case Operator::Equal: return "==";
  }
  return "";
}

namespace {

template <class Binary>
std::string render_binary(const SourceTree& tree, const Binary& e) {
  std::string out = render(tree, e.left);
  out += ' ';
  out += operator_text(e.op);
  out += ' ';
  out += render(tree, e.right);
  return out;
}

std::string jump_text(const SourceTree& tree, std::string_view keyword,
                      const std::optional<NodeId>& target) {
  std::string out(keyword);
  if (target) out += " " + tree.get<ast::JumpLabel>(*target).name;
  out += ';';
  return out;
}

}  // namespace

std::string render(const SourceTree& tree, NodeId id) {
  const SourceNode& node = tree.at(id);
  switch (node.kind()) {
    case SourceKind::Method:
      return tree.get<ast::Method>(id).name + "()";
    case SourceKind::Parameter:
      return tree.get<ast::Parameter>(id).name;
    case SourceKind::LocalVariable:
      return tree.get<ast::LocalVariable>(id).name;
    case SourceKind::PrimitiveType:
      return std::string(primitive_type_name(tree.get<ast::PrimitiveType>(id).type));
    case SourceKind::LocalVariableStatement: {
      const NodeId var_id = tree.get<ast::LocalVariableStatement>(id).variable;
      const auto& var = tree.get<ast::LocalVariable>(var_id);
      std::string out = render(tree, var.typeRef) + " " + render(tree, var_id);
      if (var.initialValue) out += " = " + render(tree, *var.initialValue);
      return out + ";";
    }
    case SourceKind::ExpressionStatement:
      return render(tree, tree.get<ast::ExpressionStatement>(id).expression) + ";";
    case SourceKind::Condition:
      return "if";
    case SourceKind::WhileLoop:
      return "while";
    case SourceKind::Block:
      return "{...}";
    case SourceKind::JumpLabel:
      return tree.get<ast::JumpLabel>(id).name + ":";
    case SourceKind::Break:
      return jump_text(tree, "break", tree.get<ast::Break>(id).target);
    case SourceKind::Continue:
      return jump_text(tree, "continue", tree.get<ast::Continue>(id).target);
    case SourceKind::Return: {
      const auto& r = tree.get<ast::Return>(id);
      std::string out = "return";
      if (r.returnValue) out += " " + render(tree, *r.returnValue);
      return out + ";";
    }
    case SourceKind::AssignmentExpr: {
      const auto& e = tree.get<ast::AssignmentExpr>(id);
      return render(tree, e.child) + " " + std::string(operator_text(e.op)) + " " +
             render(tree, e.value);
    }
    case SourceKind::AdditiveExpr:
      return render_binary(tree, tree.get<ast::AdditiveExpr>(id));
    case SourceKind::MultiplicativeExpr:
      return render_binary(tree, tree.get<ast::MultiplicativeExpr>(id));
    case SourceKind::EqualityExpr:
      return render_binary(tree, tree.get<ast::EqualityExpr>(id));
    case SourceKind::RelationExpr:
      return render_binary(tree, tree.get<ast::RelationExpr>(id));
    case SourceKind::UnaryExpr: {
      const auto& e = tree.get<ast::UnaryExpr>(id);
      std::string out;
      for (auto op : e.operators) out += operator_text(op);
      return out + render(tree, e.child);
    }
    case SourceKind::SuffixUnaryModificationExpr: {
      const auto& e = tree.get<ast::SuffixUnaryModificationExpr>(id);
      return render(tree, e.child) + std::string(operator_text(e.op));
    }
    case SourceKind::IdentifierReference:
      return render(tree, tree.get<ast::IdentifierReference>(id).target);
    case SourceKind::DecimalIntegerLiteral:
      return tree.get<ast::DecimalIntegerLiteral>(id).decimalValue;
  }
  throw Error(ErrorCode::UnsupportedKind, "no renderer for kind index " +
                                              std::to_string(static_cast<int>(node.kind())));
}

}  // namespace flowsynth
