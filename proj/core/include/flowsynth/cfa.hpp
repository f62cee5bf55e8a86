#pragma once

// Control-flow synthesis over the structure graph.
//
// The traversal walks a pending sequence of nodes with one element of
// look-ahead. Flow instructions link to the first flow instruction of the
// following element; structured nodes rewrite the sequence:
//
//   Method   link to its first instruction, continue with stmts + exit
//   Block    splice its statements in place
//   Label    remember the element after it, continue with its statement
//   Loop     expr, body, expr again (the second expr falls through to the
//            loop's successor; the body's tail flows back to the first)
//   If       expr, then, successor traversed on their own; then expr and
//            else (if any) continue in the main sequence
//   Return   link to the method's exit
//   Break    link to the label successor, or to the enclosing loop's
//            successor when unlabeled
//   Continue link to the labeled loop's condition, or to the enclosing
//            loop's condition when unlabeled
//
// The traversal is iterative; nested If traversals are frames on an
// explicit stack, so nesting depth does not consume call stack.

#include <deque>
#include <map>
#include <optional>

#include "flowsynth/flowgraph.hpp"

namespace flowsynth {

struct CfOptions {
  /// Link a flow instruction that ends the method-level sequence to the
  /// exit. The method sequence always ends in Exit, so this only matters
  /// for hand-built pending sequences.
  bool implicit_exit_fallthrough = false;
};

/// Enclosing loop of a pending element: its condition and the element
/// following the loop.
struct LoopContext {
  std::optional<FlowId> expr;
  std::optional<FlowId> succ;
};

struct PendingEntry {
  FlowId node = 0;
  LoopContext loop;
};

struct CfState {
  std::deque<PendingEntry> pending;
  FlowId exit = 0;
  /// Label -> element following the labeled statement.
  std::map<FlowId, std::optional<FlowId>> label_succ;
};

/// `el` itself if it is a flow instruction, otherwise cf_peek of its first
/// traversal child. Throws Error(EmptyContainer) when descent dead-ends.
FlowId cf_peek(const FlowGraph& graph, FlowId el);

/// Processes the pending sequence until it is empty, adding cfNext edges.
void cf_synth(FlowGraph& graph, CfState state, const CfOptions& options = {});

/// Runs cf_synth for every method, each bound to its own exit.
void synthesize_cf_edges(FlowGraph& graph, const CfOptions& options = {});

}  // namespace flowsynth
