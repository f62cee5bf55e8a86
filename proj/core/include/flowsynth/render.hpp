#pragma once

#include <string>
#include <string_view>

#include "flowsynth/source.hpp"

namespace flowsynth {

/// Concrete-syntax text for one operator, e.g. AssignmentPlus -> "+=".
std::string_view operator_text(Operator op);

/// Type-dispatched model-to-text rendering of a source node. This is the
/// text carried by flow nodes and compared by the validation harness.
///
/// Structured statements render as keywords only ("if", "while", "{...}"),
/// parenthesized sub-expressions lose their parentheses, and every binary
/// operator is separated by exactly one space on each side.
std::string render(const SourceTree& tree, NodeId id);

}  // namespace flowsynth
