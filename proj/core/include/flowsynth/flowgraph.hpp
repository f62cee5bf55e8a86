#pragma once

// Structure-graph IR: typed nodes with ordered containment references,
// def/use links to data nodes, and the analysis relations cfNext (with its
// maintained inverse cfPrev) and dfNext.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flowsynth {

using FlowId = std::uint32_t;

enum class FlowKind {
  Method,
  Exit,
  SimpleStmt,
  Expr,
  Block,
  If,
  Loop,
  Return,
  Break,
  Continue,
  Label,
  Var,
  Param,
};

std::string_view flow_kind_name(FlowKind kind);
std::optional<FlowKind> flow_kind_from_name(std::string_view name);

/// Eligible endpoints of cf/df edges.
constexpr bool is_flow_instr(FlowKind kind) {
  switch (kind) {
    case FlowKind::Method:
    case FlowKind::Exit:
    case FlowKind::SimpleStmt:
    case FlowKind::Expr:
    case FlowKind::Return:
    case FlowKind::Break:
    case FlowKind::Continue:
      return true;
    default:
      return false;
  }
}

constexpr bool is_data_node(FlowKind kind) {
  return kind == FlowKind::Var || kind == FlowKind::Param;
}

/// One structure-graph node. Which references are meaningful depends on
/// kind:
///   Method      stmts, exit, def (its Params)
///   If          expr, then_branch, else_branch
///   Loop        expr, body
///   Block       stmts
///   Label       stmt
///   Break/Continue  label
///   SimpleStmt  def, use
///   Expr/Return use
struct FlowNode {
  FlowId id = 0;
  FlowKind kind = FlowKind::SimpleStmt;
  std::string txt;

  std::vector<FlowId> stmts;
  std::optional<FlowId> exit;
  std::optional<FlowId> expr;
  std::optional<FlowId> then_branch;
  std::optional<FlowId> else_branch;
  std::optional<FlowId> body;
  std::optional<FlowId> stmt;
  std::optional<FlowId> label;
  std::vector<FlowId> def;
  std::vector<FlowId> use;
};

enum class EdgeKind { CfNext, DfNext };

using TxtPair = std::pair<std::string, std::string>;
using TxtPairSet = std::set<TxtPair>;

class FlowGraph {
 public:
  FlowId add_node(FlowKind kind, std::string txt);

  /// Re-inserts a node under its own id (deserialization). The id must be
  /// free. Analysis edges are not part of FlowNode and are added separately.
  void insert_node(FlowNode node);

  bool contains(FlowId id) const;
  const FlowNode& node(FlowId id) const;
  FlowNode& node(FlowId id);

  /// Live node ids in ascending order.
  std::vector<FlowId> node_ids() const;
  std::size_t size() const { return live_; }

  /// Method nodes in creation order.
  const std::vector<FlowId>& methods() const { return methods_; }

  /// Containment order used by traversal: Method -> stmts then exit,
  /// If -> expr, then, else?; Loop -> expr, body; Block -> stmts;
  /// Label -> stmt; everything else -> none.
  std::vector<FlowId> traversal_children(FlowId id) const;

  /// Appends from->to unless present; keeps cfPrev in sync.
  /// Throws Error(NotFlowInstr) if either endpoint is not a FlowInstr.
  void add_cf_edge(FlowId from, FlowId to);
  void add_df_edge(FlowId from, FlowId to);

  const std::vector<FlowId>& cf_next(FlowId id) const;
  const std::vector<FlowId>& cf_prev(FlowId id) const;
  const std::vector<FlowId>& df_next(FlowId id) const;

  /// All edges of one relation as (from, to), ordered by source id then
  /// adjacency order.
  std::vector<std::pair<FlowId, FlowId>> edges(EdgeKind kind) const;

  /// Removes the node and scrubs every reference and adjacency entry that
  /// points at it. Throws Error(UnknownId).
  void delete_node(FlowId id);

  /// Bulk form of delete_node with a single scrub pass.
  void delete_nodes(const std::vector<FlowId>& ids);

 private:
  void check_instr(FlowId id) const;
  void grow(FlowId id);

  std::vector<std::optional<FlowNode>> nodes_;
  std::vector<std::vector<FlowId>> cf_next_;
  std::vector<std::vector<FlowId>> cf_prev_;
  std::vector<std::vector<FlowId>> df_next_;
  std::vector<FlowId> methods_;
  std::size_t live_ = 0;
};

/// Set of (source txt, target txt) over every edge of the relation.
TxtPairSet cross_pairs(const FlowGraph& graph, EdgeKind kind);

}  // namespace flowsynth
