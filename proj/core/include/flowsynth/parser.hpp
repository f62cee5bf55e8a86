#pragma once

#include <string_view>
#include <vector>

#include "flowsynth/lexer.hpp"
#include "flowsynth/source.hpp"

namespace flowsynth {

/// Parses bare method declarations or a single `class Name { ... }` wrapper.
/// Identifier references and jump labels are resolved lexically; the
/// innermost declaration wins on shadowing.
///
/// Throws Error with code ParseError, UnresolvedName or UnresolvedLabel.
SourceTree parse_unit(const std::vector<Token>& tokens);

/// tokenize() followed by parse_unit().
SourceTree parse_source(std::string_view source);

/// Post-construction checks shared by the parser and the JSON loader:
/// every identifier reference targets a variable or parameter declared
/// earlier in an enclosing scope, and every labeled jump targets an
/// enclosing JumpLabel.
void validate_tree(const SourceTree& tree);

}  // namespace flowsynth
