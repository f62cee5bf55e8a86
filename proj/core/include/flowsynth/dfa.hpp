#pragma once

#include <set>
#include <utility>
#include <vector>

#include "flowsynth/flowgraph.hpp"

namespace flowsynth {

struct DfOptions {
  /// Keep Var and Param nodes after edge synthesis instead of deleting them.
  bool keep_vars = false;
};

/// Nearest control-flow predecessors of `user` that define `variable`.
/// Breadth-wise backward search over cfPrev; a definer stops the search
/// along its path and every node is expanded at most once. May contain
/// duplicates; callers treat the result as a set.
std::vector<FlowId> find_nearest_definers(const FlowGraph& graph, FlowId user, FlowId variable);

/// Adds definer -> user dfNext edges for every used variable of every flow
/// instruction, then prunes the data nodes unless options.keep_vars.
void synthesize_df_edges(FlowGraph& graph, const DfOptions& options = {});

/// Reference answer computed straight from the definition: (a, b) iff some
/// v is defined by a and used by b, and a cfNext path a -> ... -> b exists
/// whose intermediate nodes do not define v. Must run before pruning.
std::set<std::pair<FlowId, FlowId>> df_oracle(const FlowGraph& graph);

}  // namespace flowsynth
