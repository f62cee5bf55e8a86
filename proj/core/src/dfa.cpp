#include "flowsynth/dfa.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace flowsynth {

namespace {

bool contains(const std::vector<FlowId>& list, FlowId value) {
  return std::find(list.begin(), list.end(), value) != list.end();
}

}  // namespace

std::vector<FlowId> find_nearest_definers(const FlowGraph& graph, FlowId user, FlowId variable) {
  std::vector<FlowId> preds = graph.cf_prev(user);
  std::vector<FlowId> result;
  std::unordered_set<FlowId> known;

  while (!preds.empty()) {
    std::vector<FlowId> others;
    for (FlowId p : preds) {
      if (contains(graph.node(p).def, variable)) {
        result.push_back(p);
      } else {
        others.push_back(p);
      }
    }
    // Filter against the nodes known before this round, then absorb it.
    std::vector<FlowId> frontier;
    for (FlowId o : others) {
      for (FlowId p : graph.cf_prev(o)) {
        if (!known.contains(p)) frontier.push_back(p);
      }
    }
    known.insert(preds.begin(), preds.end());
    preds = std::move(frontier);
  }
  return result;
}

void synthesize_df_edges(FlowGraph& graph, const DfOptions& options) {
  std::vector<FlowId> data_nodes;
  for (FlowId fi : graph.node_ids()) {
    const FlowKind kind = graph.node(fi).kind;
    if (is_data_node(kind)) data_nodes.push_back(fi);
    if (!is_flow_instr(kind)) continue;
    const std::vector<FlowId> uses = graph.node(fi).use;
    for (FlowId var : uses) {
      for (FlowId definer : find_nearest_definers(graph, fi, var)) graph.add_df_edge(definer, fi);
    }
  }
  if (!options.keep_vars) graph.delete_nodes(data_nodes);
}

std::set<std::pair<FlowId, FlowId>> df_oracle(const FlowGraph& graph) {
  std::set<std::pair<FlowId, FlowId>> pairs;
  const auto ids = graph.node_ids();
  for (FlowId var : ids) {
    if (!is_data_node(graph.node(var).kind)) continue;
    for (FlowId definer : ids) {
      const FlowNode& d = graph.node(definer);
      if (!is_flow_instr(d.kind) || !contains(d.def, var)) continue;

      std::unordered_set<FlowId> visited;
      std::deque<FlowId> queue(graph.cf_next(definer).begin(), graph.cf_next(definer).end());
      while (!queue.empty()) {
        const FlowId x = queue.front();
        queue.pop_front();
        if (!visited.insert(x).second) continue;
        const FlowNode& node = graph.node(x);
        if (contains(node.use, var)) pairs.emplace(definer, x);
        if (contains(node.def, var)) continue;
        for (FlowId succ : graph.cf_next(x)) queue.push_back(succ);
      }
    }
  }
  return pairs;
}

}  // namespace flowsynth
