#include "flowsynth/graph_io.hpp"

#include <sstream>

#include "flowsynth/errors.hpp"
#include "json.hpp"

namespace flowsynth {

namespace {

using nlohmann::json;

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

struct OptionalRef {
  const char* name;
  std::optional<FlowId> FlowNode::*member;
};

struct ListRef {
  const char* name;
  std::vector<FlowId> FlowNode::*member;
};

constexpr OptionalRef kOptionalRefs[] = {
    {"exit", &FlowNode::exit}, {"expr", &FlowNode::expr}, {"then", &FlowNode::then_branch},
    {"else", &FlowNode::else_branch}, {"body", &FlowNode::body}, {"stmt", &FlowNode::stmt},
    {"label", &FlowNode::label},
};

constexpr ListRef kListRefs[] = {
    {"stmts", &FlowNode::stmts},
    {"def", &FlowNode::def},
    {"use", &FlowNode::use},
};

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

FlowId read_id(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) schema(path + ": expected non-negative integer id");
  return v.get<FlowId>();
}

}  // namespace

std::string export_dot(const FlowGraph& graph) {
  std::ostringstream out;
  out << "digraph flowgraph {\n";
  const auto ids = graph.node_ids();
  for (FlowId id : ids) {
    const FlowNode& n = graph.node(id);
    out << "  n" << id << " [label=\"" << dot_escape(n.txt) << "\\n(" << flow_kind_name(n.kind)
        << ")\"];\n";
  }
  for (FlowId id : ids) {
    for (FlowId child : graph.traversal_children(id)) {
      out << "  n" << id << " -> n" << child << " [style=dotted];\n";
    }
  }
  for (const auto& [from, to] : graph.edges(EdgeKind::CfNext)) {
    out << "  n" << from << " -> n" << to << " [style=solid];\n";
  }
  for (const auto& [from, to] : graph.edges(EdgeKind::DfNext)) {
    out << "  n" << from << " -> n" << to << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const FlowGraph& graph, int indent) {
  json doc;
  doc["nodes"] = json::array();
  for (FlowId id : graph.node_ids()) {
    const FlowNode& n = graph.node(id);
    json j;
    j["id"] = n.id;
    j["kind"] = flow_kind_name(n.kind);
    j["txt"] = n.txt;
    for (const auto& ref : kOptionalRefs) {
      if (n.*ref.member) j[ref.name] = *(n.*ref.member);
    }
    for (const auto& ref : kListRefs) {
      if (!(n.*ref.member).empty()) j[ref.name] = n.*ref.member;
    }
    doc["nodes"].push_back(std::move(j));
  }
  doc["methods"] = graph.methods();
  for (auto [kind, key] : {std::pair{EdgeKind::CfNext, "cfNext"}, std::pair{EdgeKind::DfNext, "dfNext"}}) {
    json edges = json::array();
    for (const auto& [from, to] : graph.edges(kind)) edges.push_back({from, to});
    doc[key] = std::move(edges);
  }
  return doc.dump(indent);
}

FlowGraph import_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema(std::string("$: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
    schema("$.nodes: expected array");
  }

  FlowGraph graph;
  const json& nodes = doc["nodes"];
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const json& j = nodes[i];
    const std::string path = "$.nodes[" + std::to_string(i) + "]";
    if (!j.is_object()) schema(path + ": expected object");
    FlowNode n;
    n.id = read_id(j.value("id", json()), path + ".id");
    if (!j.contains("kind") || !j["kind"].is_string()) schema(path + ".kind: expected string");
    auto kind = flow_kind_from_name(j["kind"].get<std::string>());
    if (!kind) schema(path + ".kind: unknown kind");
    n.kind = *kind;
    if (!j.contains("txt") || !j["txt"].is_string()) schema(path + ".txt: expected string");
    n.txt = j["txt"].get<std::string>();
    for (const auto& ref : kOptionalRefs) {
      if (j.contains(ref.name)) n.*ref.member = read_id(j[ref.name], path + "." + ref.name);
    }
    for (const auto& ref : kListRefs) {
      if (!j.contains(ref.name)) continue;
      const json& list = j[ref.name];
      if (!list.is_array()) schema(path + "." + ref.name + ": expected array");
      for (const auto& item : list) (n.*ref.member).push_back(read_id(item, path + "." + ref.name));
    }
    graph.insert_node(std::move(n));
  }

  // Every reference must name a node in the document.
  for (FlowId id : graph.node_ids()) {
    const FlowNode& n = graph.node(id);
    for (const auto& ref : kOptionalRefs) {
      if (n.*ref.member && !graph.contains(*(n.*ref.member))) {
        throw Error(ErrorCode::DanglingReference, "node " + std::to_string(id) + "." + ref.name);
      }
    }
    for (const auto& ref : kListRefs) {
      for (FlowId target : n.*ref.member) {
        if (!graph.contains(target)) {
          throw Error(ErrorCode::DanglingReference, "node " + std::to_string(id) + "." + ref.name);
        }
      }
    }
  }

  for (auto [kind, key] : {std::pair{EdgeKind::CfNext, "cfNext"}, std::pair{EdgeKind::DfNext, "dfNext"}}) {
    if (!doc.contains(key)) continue;
    const json& edges = doc[key];
    if (!edges.is_array()) schema(std::string("$.") + key + ": expected array");
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2) schema(std::string("$.") + key + ": expected [from, to]");
      const FlowId from = read_id(e[0], key);
      const FlowId to = read_id(e[1], key);
      if (kind == EdgeKind::CfNext) {
        graph.add_cf_edge(from, to);
      } else {
        graph.add_df_edge(from, to);
      }
    }
  }
  return graph;
}

}  // namespace flowsynth
