#include "flowsynth/ast_json.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "flowsynth/errors.hpp"
#include "flowsynth/parser.hpp"
#include "json.hpp"

namespace flowsynth {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

json ids_json(const std::vector<NodeId>& ids) { return json(ids); }

json optional_json(const std::optional<NodeId>& id) { return id ? json(*id) : json(nullptr); }

json ops_json(const std::vector<Operator>& ops) {
  json out = json::array();
  for (auto op : ops) out.push_back(operator_name(op));
  return out;
}

json node_json(const SourceNode& node) {
  json j;
  j["id"] = node.id;
  j["kind"] = source_kind_name(node.kind());
  std::visit(Overloaded{
                 [&](const ast::Method& m) {
                   j["name"] = m.name;
                   j["parameters"] = ids_json(m.parameters);
                   j["statements"] = ids_json(m.statements);
                 },
                 [&](const ast::Parameter& p) {
                   j["name"] = p.name;
                   j["typeRef"] = p.typeRef;
                 },
                 [&](const ast::LocalVariableStatement& s) { j["variable"] = s.variable; },
                 [&](const ast::LocalVariable& v) {
                   j["name"] = v.name;
                   j["typeRef"] = v.typeRef;
                   j["initialValue"] = optional_json(v.initialValue);
                 },
                 [&](const ast::ExpressionStatement& s) { j["expression"] = s.expression; },
                 [&](const ast::Condition& c) {
                   j["condition"] = c.condition;
                   j["statement"] = c.statement;
                   j["elseStatement"] = optional_json(c.elseStatement);
                 },
                 [&](const ast::WhileLoop& w) {
                   j["condition"] = w.condition;
                   j["statement"] = w.statement;
                 },
                 [&](const ast::Block& b) { j["statements"] = ids_json(b.statements); },
                 [&](const ast::JumpLabel& l) {
                   j["name"] = l.name;
                   j["statement"] = l.statement;
                 },
                 [&](const ast::Break& b) { j["target"] = optional_json(b.target); },
                 [&](const ast::Continue& c) { j["target"] = optional_json(c.target); },
                 [&](const ast::Return& r) { j["returnValue"] = optional_json(r.returnValue); },
                 [&](const ast::AssignmentExpr& e) {
                   j["child"] = e.child;
                   j["value"] = e.value;
                   j["operator"] = operator_name(e.op);
                 },
                 [&]<SourceKind K>(const ast::BinaryExpr<K>& e) {
                   j["left"] = e.left;
                   j["right"] = e.right;
                   j["operator"] = operator_name(e.op);
                 },
                 [&](const ast::UnaryExpr& e) {
                   j["operators"] = ops_json(e.operators);
                   j["child"] = e.child;
                 },
                 [&](const ast::SuffixUnaryModificationExpr& e) {
                   j["child"] = e.child;
                   j["operator"] = operator_name(e.op);
                 },
                 [&](const ast::IdentifierReference& r) { j["target"] = r.target; },
                 [&](const ast::DecimalIntegerLiteral& l) { j["decimalValue"] = l.decimalValue; },
                 [&](const ast::PrimitiveType& t) { j["type"] = primitive_type_name(t.type); },
             },
             node.payload);
  return j;
}

// Reads one node object, remapping document ids to arena indices.
class NodeReader {
 public:
  NodeReader(const json& j, std::string path, const std::unordered_map<long long, NodeId>& ids)
      : j_(j), path_(std::move(path)), ids_(ids) {}

  [[noreturn]] void schema(const std::string& field, const std::string& what) const {
    throw Error(ErrorCode::SchemaError, path_ + "." + field + ": " + what);
  }

  const json& field(const std::string& name) const {
    auto it = j_.find(name);
    if (it == j_.end()) schema(name, "missing field");
    return *it;
  }

  std::string string(const std::string& name) const {
    const json& v = field(name);
    if (!v.is_string()) schema(name, "expected string");
    return v.get<std::string>();
  }

  NodeId resolve(const json& v, const std::string& name) const {
    if (!v.is_number_integer()) schema(name, "expected integer id");
    const auto raw = v.get<long long>();
    auto it = ids_.find(raw);
    if (it == ids_.end()) {
      throw Error(ErrorCode::DanglingReference, path_ + "." + name + ": unknown id " + std::to_string(raw));
    }
    return it->second;
  }

  NodeId id(const std::string& name) const { return resolve(field(name), name); }

  std::optional<NodeId> optional_id(const std::string& name) const {
    auto it = j_.find(name);
    if (it == j_.end() || it->is_null()) return std::nullopt;
    return resolve(*it, name);
  }

  std::vector<NodeId> id_list(const std::string& name) const {
    const json& v = field(name);
    if (!v.is_array()) schema(name, "expected array");
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(resolve(v[i], name + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  Operator op(const std::string& name) const {
    auto parsed = operator_from_name(string(name));
    if (!parsed) schema(name, "unknown operator");
    return *parsed;
  }

  std::vector<Operator> op_list(const std::string& name) const {
    const json& v = field(name);
    if (!v.is_array()) schema(name, "expected array");
    std::vector<Operator> out;
    for (const auto& item : v) {
      auto parsed = item.is_string() ? operator_from_name(item.get<std::string>()) : std::nullopt;
      if (!parsed) schema(name, "unknown operator");
      out.push_back(*parsed);
    }
    return out;
  }

  std::string decimal(const std::string& name) const {
    const json& v = field(name);
    std::string digits;
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
      digits = std::to_string(v.get<unsigned long long>());
    } else if (v.is_string()) {
      digits = v.get<std::string>();
    } else {
      schema(name, "expected non-negative integer");
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      schema(name, "expected decimal digits");
    }
    const auto first = digits.find_first_not_of('0');
    return first == std::string::npos ? "0" : digits.substr(first);
  }

  SourcePayload payload(SourceKind kind) const {
    switch (kind) {
      case SourceKind::Method:
        return ast::Method{string("name"), id_list("parameters"), id_list("statements")};
      case SourceKind::Parameter:
        return ast::Parameter{string("name"), id("typeRef")};
      case SourceKind::LocalVariableStatement:
        return ast::LocalVariableStatement{id("variable")};
      case SourceKind::LocalVariable:
        return ast::LocalVariable{string("name"), id("typeRef"), optional_id("initialValue")};
      case SourceKind::ExpressionStatement:
        return ast::ExpressionStatement{id("expression")};
      case SourceKind::Condition:
        return ast::Condition{id("condition"), id("statement"), optional_id("elseStatement")};
      case SourceKind::WhileLoop:
        return ast::WhileLoop{id("condition"), id("statement")};
      case SourceKind::Block:
        return ast::Block{id_list("statements")};
      case SourceKind::JumpLabel:
        return ast::JumpLabel{string("name"), id("statement")};
      case SourceKind::Break:
        return ast::Break{optional_id("target")};
      case SourceKind::Continue:
        return ast::Continue{optional_id("target")};
      case SourceKind::Return:
        return ast::Return{optional_id("returnValue")};
      case SourceKind::AssignmentExpr:
        return ast::AssignmentExpr{id("child"), id("value"), op("operator")};
      case SourceKind::AdditiveExpr:
        return ast::AdditiveExpr{id("left"), id("right"), op("operator")};
      case SourceKind::MultiplicativeExpr:
        return ast::MultiplicativeExpr{id("left"), id("right"), op("operator")};
      case SourceKind::EqualityExpr:
        return ast::EqualityExpr{id("left"), id("right"), op("operator")};
      case SourceKind::RelationExpr:
        return ast::RelationExpr{id("left"), id("right"), op("operator")};
      case SourceKind::UnaryExpr:
        return ast::UnaryExpr{op_list("operators"), id("child")};
      case SourceKind::SuffixUnaryModificationExpr:
        return ast::SuffixUnaryModificationExpr{id("child"), op("operator")};
      case SourceKind::IdentifierReference:
        return ast::IdentifierReference{id("target")};
      case SourceKind::DecimalIntegerLiteral:
        return ast::DecimalIntegerLiteral{decimal("decimalValue")};
      case SourceKind::PrimitiveType: {
        auto type = primitive_type_from_name(string("type"));
        if (!type) schema("type", "unknown primitive type");
        return ast::PrimitiveType{*type};
      }
    }
    schema("kind", "unhandled kind");
  }

 private:
  const json& j_;
  std::string path_;
  const std::unordered_map<long long, NodeId>& ids_;
};

// Child-kind constraints: statements hold statements, expressions hold
// expressions, references point at declarations or labels.
void check_kinds(const SourceTree& tree) {
  auto expect = [&](NodeId owner, NodeId child, bool ok, const char* what) {
    if (!ok) {
      throw Error(ErrorCode::SchemaError,
                  "node " + std::to_string(owner) + ": " + what + " but got " +
                      std::string(source_kind_name(tree.at(child).kind())));
    }
  };
  auto stmt = [&](NodeId owner, NodeId child) {
    expect(owner, child, is_statement(tree.at(child).kind()), "expected statement");
  };
  auto expr = [&](NodeId owner, NodeId child) {
    expect(owner, child, is_expression(tree.at(child).kind()), "expected expression");
  };
  auto kind = [&](NodeId owner, NodeId child, SourceKind k, const char* what) {
    expect(owner, child, tree.at(child).kind() == k, what);
  };

  for (const SourceNode& node : tree.nodes()) {
    const NodeId id = node.id;
    std::visit(Overloaded{
                   [&](const ast::Method& m) {
                     for (NodeId p : m.parameters) kind(id, p, SourceKind::Parameter, "expected Parameter");
                     for (NodeId s : m.statements) stmt(id, s);
                   },
                   [&](const ast::Parameter& p) { kind(id, p.typeRef, SourceKind::PrimitiveType, "expected PrimitiveType"); },
                   [&](const ast::LocalVariableStatement& s) {
                     kind(id, s.variable, SourceKind::LocalVariable, "expected LocalVariable");
                   },
                   [&](const ast::LocalVariable& v) {
                     kind(id, v.typeRef, SourceKind::PrimitiveType, "expected PrimitiveType");
                     if (v.initialValue) expr(id, *v.initialValue);
                   },
                   [&](const ast::ExpressionStatement& s) { expr(id, s.expression); },
                   [&](const ast::Condition& c) {
                     expr(id, c.condition);
                     stmt(id, c.statement);
                     if (c.elseStatement) stmt(id, *c.elseStatement);
                   },
                   [&](const ast::WhileLoop& w) {
                     expr(id, w.condition);
                     stmt(id, w.statement);
                   },
                   [&](const ast::Block& b) {
                     for (NodeId s : b.statements) stmt(id, s);
                   },
                   [&](const ast::JumpLabel& l) { stmt(id, l.statement); },
                   [&](const ast::Break& b) {
                     if (b.target) kind(id, *b.target, SourceKind::JumpLabel, "expected JumpLabel");
                   },
                   [&](const ast::Continue& c) {
                     if (c.target) kind(id, *c.target, SourceKind::JumpLabel, "expected JumpLabel");
                   },
                   [&](const ast::Return& r) {
                     if (r.returnValue) expr(id, *r.returnValue);
                   },
                   [&](const ast::AssignmentExpr& e) {
                     kind(id, e.child, SourceKind::IdentifierReference, "expected IdentifierReference");
                     expr(id, e.value);
                   },
                   [&]<SourceKind K>(const ast::BinaryExpr<K>& e) {
                     expr(id, e.left);
                     expr(id, e.right);
                   },
                   [&](const ast::UnaryExpr& e) { expr(id, e.child); },
                   [&](const ast::SuffixUnaryModificationExpr& e) {
                     kind(id, e.child, SourceKind::IdentifierReference, "expected IdentifierReference");
                   },
                   [&](const ast::IdentifierReference& r) {
                     const SourceKind k = tree.at(r.target).kind();
                     expect(id, r.target, k == SourceKind::LocalVariable || k == SourceKind::Parameter,
                            "expected LocalVariable or Parameter target");
                   },
                   [&](const auto&) {},
               },
               node.payload);
  }

  // Containment must form a forest rooted at the methods.
  std::vector<int> parents(tree.size(), 0);
  for (const SourceNode& node : tree.nodes()) {
    for (NodeId child : containment_children(tree, node.id)) {
      if (++parents[child] > 1) {
        throw Error(ErrorCode::SchemaError, "node " + std::to_string(child) + " is contained twice");
      }
    }
  }
  for (NodeId m : tree.methods()) {
    if (parents[m] != 0) {
      throw Error(ErrorCode::SchemaError, "method " + std::to_string(m) + " is contained by another node");
    }
  }
}

}  // namespace

std::string dump_ast_json(const SourceTree& tree, int indent) {
  json doc;
  doc["nodes"] = json::array();
  for (const SourceNode& node : tree.nodes()) doc["nodes"].push_back(node_json(node));
  doc["methods"] = ids_json(tree.methods());
  return doc.dump(indent);
}

SourceTree parse_ast_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("$: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "$: expected object");
  auto nodes_it = doc.find("nodes");
  auto methods_it = doc.find("methods");
  if (nodes_it == doc.end() || !nodes_it->is_array()) {
    throw Error(ErrorCode::SchemaError, "$.nodes: expected array");
  }
  if (methods_it == doc.end() || !methods_it->is_array()) {
    throw Error(ErrorCode::SchemaError, "$.methods: expected array");
  }

  std::unordered_map<long long, NodeId> ids;
  std::vector<SourceKind> kinds;
  for (std::size_t i = 0; i < nodes_it->size(); ++i) {
    const json& n = (*nodes_it)[i];
    const std::string path = "$.nodes[" + std::to_string(i) + "]";
    if (!n.is_object()) throw Error(ErrorCode::SchemaError, path + ": expected object");
    auto id_it = n.find("id");
    auto kind_it = n.find("kind");
    if (id_it == n.end() || !id_it->is_number_integer()) {
      throw Error(ErrorCode::SchemaError, path + ".id: expected integer");
    }
    if (kind_it == n.end() || !kind_it->is_string()) {
      throw Error(ErrorCode::SchemaError, path + ".kind: expected string");
    }
    auto kind = source_kind_from_name(kind_it->get<std::string>());
    if (!kind) {
      throw Error(ErrorCode::SchemaError, path + ".kind: unknown kind '" + kind_it->get<std::string>() + "'");
    }
    if (!ids.emplace(id_it->get<long long>(), static_cast<NodeId>(i)).second) {
      throw Error(ErrorCode::SchemaError, path + ".id: duplicate id");
    }
    kinds.push_back(*kind);
  }

  SourceTree tree;
  for (std::size_t i = 0; i < nodes_it->size(); ++i) {
    NodeReader reader((*nodes_it)[i], "$.nodes[" + std::to_string(i) + "]", ids);
    tree.add(reader.payload(kinds[i]));
  }
  for (std::size_t i = 0; i < methods_it->size(); ++i) {
    const json& m = (*methods_it)[i];
    const std::string path = "$.methods[" + std::to_string(i) + "]";
    if (!m.is_number_integer()) throw Error(ErrorCode::SchemaError, path + ": expected integer id");
    auto it = ids.find(m.get<long long>());
    if (it == ids.end()) {
      throw Error(ErrorCode::DanglingReference, path + ": unknown id " + std::to_string(m.get<long long>()));
    }
    tree.add_method(it->second);
  }

  check_kinds(tree);
  validate_tree(tree);
  return tree;
}

SourceTree load_ast_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ast_json(buffer.str());
}

}  // namespace flowsynth
