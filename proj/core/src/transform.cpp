#include "flowsynth/transform.hpp"

#include <algorithm>
#include <unordered_set>

#include "flowsynth/errors.hpp"
#include "flowsynth/render.hpp"

namespace flowsynth {

namespace {

constexpr std::array<std::string_view, 15> kRuleNames = {
    "method2method",  "param2param",    "local-var2var",     "local-var-stmt2simple-stmt",
    "stmt2simple-stmt", "label2label",  "expression2expr",   "condition2if",
    "block2block",    "return2return",  "break2break",       "continue2continue",
    "while-loop2loop", "stmt2item",     "var-creating-rule",
};

void append_unique(std::vector<FlowId>& list, FlowId value) {
  if (std::find(list.begin(), list.end(), value) == list.end()) list.push_back(value);
}

}  // namespace

std::string_view rule_name(Rule rule) { return kRuleNames.at(static_cast<std::size_t>(rule)); }

const std::vector<Rule>& generalized_rules(Rule rule) {
  static const std::vector<Rule> kStmt2Item = {
      Rule::LocalVarStmt2SimpleStmt, Rule::Condition2If,     Rule::Block2Block,
      Rule::Return2Return,           Rule::WhileLoop2Loop,   Rule::Break2Break,
      Rule::Continue2Continue,       Rule::Label2Label,      Rule::Stmt2SimpleStmt,
  };
  static const std::vector<Rule> kVarCreating = {Rule::Param2Param, Rule::LocalVar2Var};
  static const std::vector<Rule> kNone;
  switch (rule) {
    case Rule::Stmt2Item: return kStmt2Item;
    case Rule::VarCreatingRule: return kVarCreating;
    default: return kNone;
  }
}

bool rule_applies(Rule rule, SourceKind kind) {
  switch (rule) {
    case Rule::Method2Method: return kind == SourceKind::Method;
    case Rule::Param2Param: return kind == SourceKind::Parameter;
    case Rule::LocalVar2Var: return kind == SourceKind::LocalVariable;
    case Rule::LocalVarStmt2SimpleStmt: return kind == SourceKind::LocalVariableStatement;
    case Rule::Stmt2SimpleStmt: return is_statement(kind);
    case Rule::Label2Label: return kind == SourceKind::JumpLabel;
    case Rule::Expression2Expr: return is_expression(kind);
    case Rule::Condition2If: return kind == SourceKind::Condition;
    case Rule::Block2Block: return kind == SourceKind::Block;
    case Rule::Return2Return: return kind == SourceKind::Return;
    case Rule::Break2Break: return kind == SourceKind::Break;
    case Rule::Continue2Continue: return kind == SourceKind::Continue;
    case Rule::WhileLoop2Loop: return kind == SourceKind::WhileLoop;
    case Rule::Stmt2Item:
    case Rule::VarCreatingRule: {
      const auto& subs = generalized_rules(rule);
      return std::any_of(subs.begin(), subs.end(), [&](Rule r) { return rule_applies(r, kind); });
    }
  }
  return false;
}

// ---- TraceStore ---------------------------------------------------------

Trace TraceStore::trace(Rule rule) const {
  const auto& subs = generalized_rules(rule);
  if (subs.empty()) return traces_.at(static_cast<std::size_t>(rule));
  Trace merged;
  for (Rule sub : subs) {
    for (const auto& [source, targets] : trace(sub)) merged.emplace(source, targets);
  }
  return merged;
}

const std::vector<FlowId>* TraceStore::lookup(Rule rule, NodeId source) const {
  const auto& t = traces_.at(static_cast<std::size_t>(rule));
  auto it = t.find(source);
  return it == t.end() ? nullptr : &it->second;
}

void TraceStore::record(Rule rule, NodeId source, std::vector<FlowId> targets) {
  traces_.at(static_cast<std::size_t>(rule))[source] = std::move(targets);
}

// ---- used_vars ----------------------------------------------------------

std::vector<NodeId> used_vars(const SourceTree& tree, NodeId id) {
  std::vector<NodeId> out;
  std::unordered_set<NodeId> seen;
  for (NodeId n : containment_closure(tree, id)) {
    if (tree.at(n).kind() != SourceKind::IdentifierReference) continue;
    const NodeId target = tree.get<ast::IdentifierReference>(n).target;
    if (seen.insert(target).second) out.push_back(target);
  }
  return out;
}

// ---- Transformer --------------------------------------------------------

void Transformer::require(Rule rule, NodeId source) const {
  const SourceKind kind = tree_.at(source).kind();
  if (!rule_applies(rule, kind)) {
    throw Error(ErrorCode::RuleMismatch, std::string(rule_name(rule)) + " cannot transform " +
                                             std::string(source_kind_name(kind)) + " node " +
                                             std::to_string(source));
  }
}

template <class Body>
FlowId Transformer::apply(Rule rule, NodeId source, FlowKind kind, Body&& body) {
  require(rule, source);
  if (const auto* known = traces_.lookup(rule, source)) return known->front();
  const FlowId id = graph_.add_node(kind, render(tree_, source));
  traces_.record(rule, source, {id});
  body(id);
  return id;
}

std::vector<FlowId> Transformer::vars_of(const std::vector<NodeId>& decls) {
  std::vector<FlowId> out;
  for (NodeId decl : decls) append_unique(out, var_creating_rule(decl));
  return out;
}

FlowId Transformer::single_var(NodeId lhs) {
  const auto vars = used_vars(tree_, lhs);
  if (vars.size() != 1) {
    throw Error(ErrorCode::MalformedLhs, "modified expression at node " + std::to_string(lhs) +
                                             " references " + std::to_string(vars.size()) +
                                             " variables, expected exactly one");
  }
  return var_creating_rule(vars.front());
}

void Transformer::run() {
  for (NodeId m : tree_.methods()) method2method(m);
}

MethodNodes Transformer::method2method(NodeId m) {
  require(Rule::Method2Method, m);
  if (const auto* known = traces_.lookup(Rule::Method2Method, m)) {
    return {(*known)[0], (*known)[1]};
  }
  const FlowId method = graph_.add_node(FlowKind::Method, render(tree_, m));
  const FlowId exit = graph_.add_node(FlowKind::Exit, "Exit");
  traces_.record(Rule::Method2Method, m, {method, exit});

  const auto& src = tree_.get<ast::Method>(m);
  std::vector<FlowId> stmts;
  for (NodeId s : src.statements) stmts.push_back(stmt2item(s));
  std::vector<FlowId> params;
  for (NodeId p : src.parameters) params.push_back(param2param(p));

  FlowNode& node = graph_.node(method);
  node.stmts = std::move(stmts);
  node.exit = exit;
  node.def = std::move(params);
  return {method, exit};
}

FlowId Transformer::param2param(NodeId p) {
  return apply(Rule::Param2Param, p, FlowKind::Param, [](FlowId) {});
}

FlowId Transformer::local_var2var(NodeId lv) {
  return apply(Rule::LocalVar2Var, lv, FlowKind::Var, [](FlowId) {});
}

FlowId Transformer::local_var_stmt2simple_stmt(NodeId lvs) {
  return apply(Rule::LocalVarStmt2SimpleStmt, lvs, FlowKind::SimpleStmt, [&](FlowId id) {
    const NodeId var = tree_.get<ast::LocalVariableStatement>(lvs).variable;
    const FlowId defined = local_var2var(var);
    const auto& init = tree_.get<ast::LocalVariable>(var).initialValue;
    std::vector<FlowId> uses = init ? vars_of(used_vars(tree_, *init)) : std::vector<FlowId>{};
    FlowNode& node = graph_.node(id);
    node.def = {defined};
    node.use = std::move(uses);
  });
}

FlowId Transformer::stmt2simple_stmt(NodeId s) {
  return apply(Rule::Stmt2SimpleStmt, s, FlowKind::SimpleStmt, [&](FlowId id) {
    std::vector<FlowId> defs;
    std::vector<FlowId> uses;
    const auto closure = containment_closure(tree_, s);
    for (NodeId n : closure) {
      if (tree_.at(n).kind() != SourceKind::AssignmentExpr) continue;
      const auto& assign = tree_.get<ast::AssignmentExpr>(n);
      append_unique(defs, single_var(assign.child));
      for (FlowId v : vars_of(used_vars(tree_, assign.value))) append_unique(uses, v);
    }
    for (NodeId n : closure) {
      if (tree_.at(n).kind() != SourceKind::SuffixUnaryModificationExpr) continue;
      const FlowId var = single_var(tree_.get<ast::SuffixUnaryModificationExpr>(n).child);
      append_unique(defs, var);
      append_unique(uses, var);
    }
    FlowNode& node = graph_.node(id);
    node.def = std::move(defs);
    node.use = std::move(uses);
  });
}

FlowId Transformer::label2label(NodeId l) {
  return apply(Rule::Label2Label, l, FlowKind::Label, [&](FlowId id) {
    const FlowId stmt = stmt2item(tree_.get<ast::JumpLabel>(l).statement);
    graph_.node(id).stmt = stmt;
  });
}

FlowId Transformer::expression2expr(NodeId ex) {
  return apply(Rule::Expression2Expr, ex, FlowKind::Expr, [&](FlowId id) {
    auto uses = vars_of(used_vars(tree_, ex));
    graph_.node(id).use = std::move(uses);
  });
}

FlowId Transformer::condition2if(NodeId c) {
  return apply(Rule::Condition2If, c, FlowKind::If, [&](FlowId id) {
    const auto& src = tree_.get<ast::Condition>(c);
    const FlowId expr = expression2expr(src.condition);
    const FlowId then_branch = stmt2item(src.statement);
    std::optional<FlowId> else_branch;
    if (src.elseStatement) else_branch = stmt2item(*src.elseStatement);
    FlowNode& node = graph_.node(id);
    node.expr = expr;
    node.then_branch = then_branch;
    node.else_branch = else_branch;
  });
}

FlowId Transformer::block2block(NodeId b) {
  return apply(Rule::Block2Block, b, FlowKind::Block, [&](FlowId id) {
    std::vector<FlowId> stmts;
    for (NodeId s : tree_.get<ast::Block>(b).statements) stmts.push_back(stmt2item(s));
    graph_.node(id).stmts = std::move(stmts);
  });
}

FlowId Transformer::return2return(NodeId r) {
  return apply(Rule::Return2Return, r, FlowKind::Return, [&](FlowId id) {
    auto uses = vars_of(used_vars(tree_, r));
    graph_.node(id).use = std::move(uses);
  });
}

FlowId Transformer::break2break(NodeId b) {
  return apply(Rule::Break2Break, b, FlowKind::Break, [&](FlowId id) {
    const auto& target = tree_.get<ast::Break>(b).target;
    if (!target) return;
    const FlowId label = label2label(*target);
    graph_.node(id).label = label;
  });
}

FlowId Transformer::continue2continue(NodeId c) {
  return apply(Rule::Continue2Continue, c, FlowKind::Continue, [&](FlowId id) {
    const auto& target = tree_.get<ast::Continue>(c).target;
    if (!target) return;
    const FlowId label = label2label(*target);
    graph_.node(id).label = label;
  });
}

FlowId Transformer::while_loop2loop(NodeId wl) {
  return apply(Rule::WhileLoop2Loop, wl, FlowKind::Loop, [&](FlowId id) {
    const auto& src = tree_.get<ast::WhileLoop>(wl);
    const FlowId expr = expression2expr(src.condition);
    const FlowId body = stmt2item(src.statement);
    FlowNode& node = graph_.node(id);
    node.expr = expr;
    node.body = body;
  });
}

FlowId Transformer::stmt2item(NodeId stmt) {
  const SourceKind kind = tree_.at(stmt).kind();
  for (Rule rule : generalized_rules(Rule::Stmt2Item)) {
    if (!rule_applies(rule, kind)) continue;
    switch (rule) {
      case Rule::LocalVarStmt2SimpleStmt: return local_var_stmt2simple_stmt(stmt);
      case Rule::Condition2If: return condition2if(stmt);
      case Rule::Block2Block: return block2block(stmt);
      case Rule::Return2Return: return return2return(stmt);
      case Rule::WhileLoop2Loop: return while_loop2loop(stmt);
      case Rule::Break2Break: return break2break(stmt);
      case Rule::Continue2Continue: return continue2continue(stmt);
      case Rule::Label2Label: return label2label(stmt);
      case Rule::Stmt2SimpleStmt: return stmt2simple_stmt(stmt);
      default: break;
    }
  }
  throw Error(ErrorCode::NoApplicableRule, "stmt2item has no rule for " +
                                               std::string(source_kind_name(kind)) + " node " +
                                               std::to_string(stmt));
}

FlowId Transformer::var_creating_rule(NodeId v) {
  const SourceKind kind = tree_.at(v).kind();
  if (rule_applies(Rule::Param2Param, kind)) return param2param(v);
  if (rule_applies(Rule::LocalVar2Var, kind)) return local_var2var(v);
  throw Error(ErrorCode::NoApplicableRule, "var-creating-rule has no rule for " +
                                               std::string(source_kind_name(kind)) + " node " +
                                               std::to_string(v));
}

TransformResult java_to_flowgraph(const SourceTree& tree) {
  TransformResult result;
  Transformer transformer(tree, result.graph);
  transformer.run();
  result.traces = transformer.traces();
  return result;
}

}  // namespace flowsynth
