#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace flowsynth {

enum class TokenKind {
  Identifier,
  IntLiteral,
  Keyword,
  Star,
  Minus,
  Plus,
  Slash,
  Less,
  Greater,
  Assign,
  MinusMinus,
  PlusPlus,
  PlusAssign,
  EqualEqual,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Semi,
  Colon,
  Comma,
  End,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  int column = 1;

  bool is_keyword(std::string_view word) const {
    return kind == TokenKind::Keyword && text == word;
  }
};

/// Splits source text into tokens, always terminated by an End token.
/// Throws Error(UnknownCharacter) with the offending line/column.
std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word);

}  // namespace flowsynth
