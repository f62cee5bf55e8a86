#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "flowsynth/source.hpp"

namespace flowsynth {

// Canonical JSON encoding of a SourceTree:
//   {"nodes": [{"id": int, "kind": string, ...fields}], "methods": [id, ...]}
// Field names follow the ast:: payload members. Child and reference links
// are plain ids; ids in the document need not be dense.

std::string dump_ast_json(const SourceTree& tree, int indent = 2);

/// Throws Error(SchemaError) for malformed documents and
/// Error(DanglingReference) for ids that name no node.
SourceTree parse_ast_json(std::string_view text);

SourceTree load_ast_json(const std::filesystem::path& path);

}  // namespace flowsynth
