#include "flowsynth/cfa.hpp"

#include <vector>

#include "flowsynth/errors.hpp"

namespace flowsynth {

namespace {

struct Frame {
  std::deque<PendingEntry> seq;
  bool method_level = false;
};

std::string describe(const FlowGraph& graph, FlowId id) {
  const FlowNode& n = graph.node(id);
  return std::string(flow_kind_name(n.kind)) + " " + std::to_string(id) + " \"" + n.txt + "\"";
}

void prepend(std::deque<PendingEntry>& seq, const std::vector<FlowId>& nodes, const LoopContext& loop) {
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) seq.push_front({*it, loop});
}

}  // namespace

FlowId cf_peek(const FlowGraph& graph, FlowId el) {
  FlowId current = el;
  while (!is_flow_instr(graph.node(current).kind)) {
    const auto children = graph.traversal_children(current);
    if (children.empty()) {
      throw Error(ErrorCode::EmptyContainer,
                  describe(graph, current) + " contains no flow instruction");
    }
    current = children.front();
  }
  return current;
}

void cf_synth(FlowGraph& graph, CfState state, const CfOptions& options) {
  auto& label_succ = state.label_succ;
  const FlowId exit = state.exit;

  std::vector<Frame> frames;
  frames.push_back(Frame{std::move(state.pending), true});

  while (!frames.empty()) {
    if (frames.back().seq.empty()) {
      frames.pop_back();
      continue;
    }
    Frame& frame = frames.back();
    const PendingEntry el = frame.seq.front();
    frame.seq.pop_front();
    const bool has_next = !frame.seq.empty();
    const PendingEntry next = has_next ? frame.seq.front() : PendingEntry{};
    const FlowNode& node = graph.node(el.node);

    switch (node.kind) {
      case FlowKind::Method: {
        const auto contents = graph.traversal_children(el.node);
        if (contents.empty()) {
          throw Error(ErrorCode::EmptyContainer, describe(graph, el.node) + " has no contents");
        }
        graph.add_cf_edge(el.node, cf_peek(graph, contents.front()));
        label_succ.clear();
        frame.seq.clear();
        prepend(frame.seq, contents, LoopContext{});
        break;
      }
      case FlowKind::SimpleStmt:
      case FlowKind::Expr:
        if (has_next) {
          graph.add_cf_edge(el.node, cf_peek(graph, next.node));
        } else if (options.implicit_exit_fallthrough && frame.method_level) {
          graph.add_cf_edge(el.node, exit);
        }
        break;
      case FlowKind::Block:
        prepend(frame.seq, node.stmts, el.loop);
        break;
      case FlowKind::Label: {
        if (!node.stmt) {
          throw Error(ErrorCode::EmptyContainer, describe(graph, el.node) + " has no statement");
        }
        label_succ[el.node] = has_next ? std::optional<FlowId>(next.node) : std::nullopt;
        frame.seq.push_front({*node.stmt, el.loop});
        break;
      }
      case FlowKind::Return:
        graph.add_cf_edge(el.node, exit);
        break;
      case FlowKind::Break: {
        if (node.label) {
          auto it = label_succ.find(*node.label);
          if (it == label_succ.end()) {
            throw Error(ErrorCode::MissingLabelTarget,
                        describe(graph, el.node) + " targets a label not in scope");
          }
          if (!it->second) {
            throw Error(ErrorCode::MissingSuccessor,
                        describe(graph, el.node) + ": labeled statement has no successor");
          }
          graph.add_cf_edge(el.node, cf_peek(graph, *it->second));
        } else {
          if (!el.loop.succ) {
            throw Error(ErrorCode::MissingLoopContext, describe(graph, el.node) + " outside a loop");
          }
          graph.add_cf_edge(el.node, cf_peek(graph, *el.loop.succ));
        }
        break;
      }
      case FlowKind::Continue: {
        if (node.label) {
          const FlowNode& label = graph.node(*node.label);
          if (!label.stmt || graph.node(*label.stmt).kind != FlowKind::Loop) {
            throw Error(ErrorCode::MissingLoopContext,
                        describe(graph, el.node) + " targets a label that is not on a loop");
          }
          graph.add_cf_edge(el.node, cf_peek(graph, *node.label));
        } else {
          if (!el.loop.expr) {
            throw Error(ErrorCode::MissingLoopContext, describe(graph, el.node) + " outside a loop");
          }
          graph.add_cf_edge(el.node, *el.loop.expr);
        }
        break;
      }
      case FlowKind::Loop: {
        if (!node.expr || !node.body) {
          throw Error(ErrorCode::EmptyContainer, describe(graph, el.node) + " is incomplete");
        }
        if (!has_next) {
          throw Error(ErrorCode::MissingSuccessor, describe(graph, el.node) + " has no successor");
        }
        const LoopContext inner{node.expr, next.node};
        frame.seq.push_front({*node.expr, el.loop});
        frame.seq.push_front({*node.body, inner});
        frame.seq.push_front({*node.expr, inner});
        break;
      }
      case FlowKind::If: {
        if (!node.expr || !node.then_branch) {
          throw Error(ErrorCode::EmptyContainer, describe(graph, el.node) + " is incomplete");
        }
        if (!has_next) {
          throw Error(ErrorCode::MissingSuccessor, describe(graph, el.node) + " has no successor");
        }
        const PendingEntry after{cf_peek(graph, next.node), next.loop};
        Frame branch;
        branch.seq = {{*node.expr, el.loop}, {*node.then_branch, el.loop}, after};
        if (node.else_branch) frame.seq.push_front({*node.else_branch, el.loop});
        frame.seq.push_front({*node.expr, el.loop});
        frames.push_back(std::move(branch));
        break;
      }
      case FlowKind::Exit:
        if (has_next) {
          throw Error(ErrorCode::ExitNotLast,
                      describe(graph, el.node) + " followed by " + describe(graph, next.node));
        }
        break;
      case FlowKind::Var:
      case FlowKind::Param:
        throw Error(ErrorCode::InvalidPendingNode, describe(graph, el.node) + " in pending sequence");
    }
  }
}

void synthesize_cf_edges(FlowGraph& graph, const CfOptions& options) {
  const std::vector<FlowId> methods = graph.methods();
  for (FlowId m : methods) {
    const auto& exit = graph.node(m).exit;
    if (!exit) throw Error(ErrorCode::UnknownId, describe(graph, m) + " has no exit");
    CfState state;
    state.pending.push_back({m, {}});
    state.exit = *exit;
    cf_synth(graph, std::move(state), options);
  }
}

}  // namespace flowsynth
