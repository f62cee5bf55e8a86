#pragma once

// Rule-based lowering of source methods into the structure graph.
//
// Each rule maps one source node to the flow node(s) it creates and is
// memoized: the created node is recorded in the trace store before the rule
// body runs, so re-entrant calls (a labeled break reaching back to its
// enclosing label) and repeated calls both return the same node.

#include <array>
#include <map>
#include <string_view>
#include <vector>

#include "flowsynth/flowgraph.hpp"
#include "flowsynth/source.hpp"

namespace flowsynth {

enum class Rule {
  Method2Method,
  Param2Param,
  LocalVar2Var,
  LocalVarStmt2SimpleStmt,
  Stmt2SimpleStmt,
  Label2Label,
  Expression2Expr,
  Condition2If,
  Block2Block,
  Return2Return,
  Break2Break,
  Continue2Continue,
  WhileLoop2Loop,
  // generalizing rules
  Stmt2Item,
  VarCreatingRule,
};

inline constexpr std::size_t kConcreteRuleCount = 13;

std::string_view rule_name(Rule rule);

/// Subrules of a generalizing rule in dispatch order; empty for concrete rules.
const std::vector<Rule>& generalized_rules(Rule rule);

using Trace = std::map<NodeId, std::vector<FlowId>>;

class TraceStore {
 public:
  /// Source -> created nodes for one rule. For a generalizing rule this is
  /// the union of its subrules' traces.
  Trace trace(Rule rule) const;

  const std::vector<FlowId>* lookup(Rule rule, NodeId source) const;
  void record(Rule rule, NodeId source, std::vector<FlowId> targets);

 private:
  std::array<Trace, kConcreteRuleCount> traces_;
};

struct MethodNodes {
  FlowId method;
  FlowId exit;

  bool operator==(const MethodNodes&) const = default;
};

class Transformer {
 public:
  Transformer(const SourceTree& tree, FlowGraph& graph) : tree_(tree), graph_(graph) {}

  /// Applies method2method to every method of the tree.
  void run();

  MethodNodes method2method(NodeId m);
  FlowId param2param(NodeId p);
  FlowId local_var2var(NodeId lv);
  FlowId local_var_stmt2simple_stmt(NodeId lvs);
  FlowId stmt2simple_stmt(NodeId s);
  FlowId label2label(NodeId l);
  FlowId expression2expr(NodeId ex);
  FlowId condition2if(NodeId c);
  FlowId block2block(NodeId b);
  FlowId return2return(NodeId r);
  FlowId break2break(NodeId b);
  FlowId continue2continue(NodeId c);
  FlowId while_loop2loop(NodeId wl);

  /// First applicable of: local_var_stmt2simple_stmt, condition2if,
  /// block2block, return2return, while_loop2loop, break2break,
  /// continue2continue, label2label, stmt2simple_stmt.
  FlowId stmt2item(NodeId stmt);

  /// param2param or local_var2var.
  FlowId var_creating_rule(NodeId v);

  const TraceStore& traces() const { return traces_; }

 private:
  template <class Body>
  FlowId apply(Rule rule, NodeId source, FlowKind kind, Body&& body);

  void require(Rule rule, NodeId source) const;
  std::vector<FlowId> vars_of(const std::vector<NodeId>& decls);
  FlowId single_var(NodeId lhs);

  const SourceTree& tree_;
  FlowGraph& graph_;
  TraceStore traces_;
};

/// Whether a concrete rule's source type matches the node kind.
bool rule_applies(Rule rule, SourceKind kind);

/// Declarations targeted by IdentifierReferences in the reflexive-transitive
/// containment closure of `id`, depth-first pre-order, first occurrence kept.
std::vector<NodeId> used_vars(const SourceTree& tree, NodeId id);

struct TransformResult {
  FlowGraph graph;
  TraceStore traces;
};

TransformResult java_to_flowgraph(const SourceTree& tree);

}  // namespace flowsynth
