#pragma once

#include <string>
#include <string_view>

#include "flowsynth/flowgraph.hpp"

namespace flowsynth {

/// Graphviz rendering: one node per FlowNode (txt and kind in the label),
/// solid edges for cfNext, dashed for dfNext, dotted for containment.
/// Nodes and edges are emitted in id order.
std::string export_dot(const FlowGraph& graph);

/// {"nodes": [...], "methods": [...], "cfNext": [[from, to]...],
///  "dfNext": [[from, to]...]}; reference fields are present only when set.
std::string export_json(const FlowGraph& graph, int indent = 2);

/// Inverse of export_json. Throws Error(SchemaError) on malformed input.
FlowGraph import_json(std::string_view text);

}  // namespace flowsynth
