#include "flowsynth/flowgraph.hpp"

#include <algorithm>
#include <array>

#include "flowsynth/errors.hpp"

namespace flowsynth {

namespace {

constexpr std::array<std::string_view, 13> kFlowKindNames = {
    "Method", "Exit",  "SimpleStmt", "Expr",  "Block", "If",    "Loop",
    "Return", "Break", "Continue",   "Label", "Var",   "Param",
};

void erase_value(std::vector<FlowId>& list, FlowId value) {
  list.erase(std::remove(list.begin(), list.end(), value), list.end());
}

bool append_unique(std::vector<FlowId>& list, FlowId value) {
  if (std::find(list.begin(), list.end(), value) != list.end()) return false;
  list.push_back(value);
  return true;
}

}  // namespace

std::string_view flow_kind_name(FlowKind kind) {
  return kFlowKindNames.at(static_cast<std::size_t>(kind));
}

std::optional<FlowKind> flow_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFlowKindNames.size(); ++i) {
    if (kFlowKindNames[i] == name) return static_cast<FlowKind>(i);
  }
  return std::nullopt;
}

void FlowGraph::grow(FlowId id) {
  if (id < nodes_.size()) return;
  const std::size_t size = static_cast<std::size_t>(id) + 1;
  nodes_.resize(size);
  cf_next_.resize(size);
  cf_prev_.resize(size);
  df_next_.resize(size);
}

FlowId FlowGraph::add_node(FlowKind kind, std::string txt) {
  FlowNode node;
  node.id = static_cast<FlowId>(nodes_.size());
  node.kind = kind;
  node.txt = std::move(txt);
  const FlowId id = node.id;
  insert_node(std::move(node));
  return id;
}

void FlowGraph::insert_node(FlowNode node) {
  if (contains(node.id)) {
    throw Error(ErrorCode::SchemaError, "flow node id " + std::to_string(node.id) + " already in use");
  }
  const FlowId id = node.id;
  grow(id);
  if (node.kind == FlowKind::Method) methods_.push_back(id);
  nodes_[id] = std::move(node);
  ++live_;
}

bool FlowGraph::contains(FlowId id) const { return id < nodes_.size() && nodes_[id].has_value(); }

const FlowNode& FlowGraph::node(FlowId id) const {
  if (!contains(id)) throw Error(ErrorCode::UnknownId, "flow node " + std::to_string(id));
  return *nodes_[id];
}

FlowNode& FlowGraph::node(FlowId id) {
  return const_cast<FlowNode&>(std::as_const(*this).node(id));
}

std::vector<FlowId> FlowGraph::node_ids() const {
  std::vector<FlowId> ids;
  ids.reserve(live_);
  for (FlowId id = 0; id < nodes_.size(); ++id) {
    if (nodes_[id]) ids.push_back(id);
  }
  return ids;
}

std::vector<FlowId> FlowGraph::traversal_children(FlowId id) const {
  const FlowNode& n = node(id);
  std::vector<FlowId> out;
  switch (n.kind) {
    case FlowKind::Method:
      out = n.stmts;
      if (n.exit) out.push_back(*n.exit);
      break;
    case FlowKind::If:
      if (n.expr) out.push_back(*n.expr);
      if (n.then_branch) out.push_back(*n.then_branch);
      if (n.else_branch) out.push_back(*n.else_branch);
      break;
    case FlowKind::Loop:
      if (n.expr) out.push_back(*n.expr);
      if (n.body) out.push_back(*n.body);
      break;
    case FlowKind::Block:
      out = n.stmts;
      break;
    case FlowKind::Label:
      if (n.stmt) out.push_back(*n.stmt);
      break;
    default:
      break;
  }
  return out;
}

void FlowGraph::check_instr(FlowId id) const {
  const FlowNode& n = node(id);
  if (!is_flow_instr(n.kind)) {
    throw Error(ErrorCode::NotFlowInstr, "node " + std::to_string(id) + " (" +
                                             std::string(flow_kind_name(n.kind)) + " \"" + n.txt +
                                             "\") is not a flow instruction");
  }
}

void FlowGraph::add_cf_edge(FlowId from, FlowId to) {
  check_instr(from);
  check_instr(to);
  if (append_unique(cf_next_[from], to)) cf_prev_[to].push_back(from);
}

void FlowGraph::add_df_edge(FlowId from, FlowId to) {
  check_instr(from);
  check_instr(to);
  append_unique(df_next_[from], to);
}

const std::vector<FlowId>& FlowGraph::cf_next(FlowId id) const {
  node(id);
  return cf_next_[id];
}

const std::vector<FlowId>& FlowGraph::cf_prev(FlowId id) const {
  node(id);
  return cf_prev_[id];
}

const std::vector<FlowId>& FlowGraph::df_next(FlowId id) const {
  node(id);
  return df_next_[id];
}

std::vector<std::pair<FlowId, FlowId>> FlowGraph::edges(EdgeKind kind) const {
  const auto& adjacency = kind == EdgeKind::CfNext ? cf_next_ : df_next_;
  std::vector<std::pair<FlowId, FlowId>> out;
  for (FlowId from = 0; from < adjacency.size(); ++from) {
    for (FlowId to : adjacency[from]) out.emplace_back(from, to);
  }
  return out;
}

void FlowGraph::delete_node(FlowId id) { delete_nodes({id}); }

void FlowGraph::delete_nodes(const std::vector<FlowId>& ids) {
  std::vector<bool> doomed(nodes_.size(), false);
  for (FlowId id : ids) {
    node(id);
    doomed[id] = true;
  }
  auto is_doomed = [&](FlowId x) { return x < doomed.size() && doomed[x]; };
  auto scrub = [&](std::vector<FlowId>& list) {
    list.erase(std::remove_if(list.begin(), list.end(), is_doomed), list.end());
  };
  auto scrub_ref = [&](std::optional<FlowId>& ref) {
    if (ref && is_doomed(*ref)) ref.reset();
  };

  for (FlowId id : ids) {
    for (FlowId succ : cf_next_[id]) erase_value(cf_prev_[succ], id);
    for (FlowId pred : cf_prev_[id]) erase_value(cf_next_[pred], id);
    cf_next_[id].clear();
    cf_prev_[id].clear();
    df_next_[id].clear();
  }

  for (auto& slot : nodes_) {
    if (!slot) continue;
    FlowNode& other = *slot;
    scrub(df_next_[other.id]);
    scrub(other.stmts);
    scrub(other.def);
    scrub(other.use);
    scrub_ref(other.exit);
    scrub_ref(other.expr);
    scrub_ref(other.then_branch);
    scrub_ref(other.else_branch);
    scrub_ref(other.body);
    scrub_ref(other.stmt);
    scrub_ref(other.label);
  }

  scrub(methods_);
  for (FlowId id : ids) {
    if (nodes_[id]) {
      nodes_[id].reset();
      --live_;
    }
  }
}

TxtPairSet cross_pairs(const FlowGraph& graph, EdgeKind kind) {
  TxtPairSet pairs;
  for (const auto& [from, to] : graph.edges(kind)) {
    pairs.emplace(graph.node(from).txt, graph.node(to).txt);
  }
  return pairs;
}

}  // namespace flowsynth
