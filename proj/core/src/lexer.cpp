#include "flowsynth/lexer.hpp"

#include <array>
#include <cctype>

#include "flowsynth/errors.hpp"

namespace flowsynth {

namespace {

constexpr std::array<std::string_view, 18> kKeywords = {
    "if",    "else",    "while", "break", "continue", "return", "int",    "boolean", "long",
    "short", "byte",    "char",  "float", "double",   "void",   "public", "static",  "class",
};

struct Punct {
  std::string_view lexeme;
  TokenKind kind;
};

// Two-character lexemes first so they win over their prefixes.
constexpr std::array<Punct, 19> kPunctuation = {{
    {"--", TokenKind::MinusMinus}, {"++", TokenKind::PlusPlus}, {"+=", TokenKind::PlusAssign},
    {"==", TokenKind::EqualEqual}, {"*", TokenKind::Star},      {"-", TokenKind::Minus},
    {"+", TokenKind::Plus},        {"/", TokenKind::Slash},     {"<", TokenKind::Less},
    {">", TokenKind::Greater},     {"=", TokenKind::Assign},    {"(", TokenKind::LParen},
    {")", TokenKind::RParen},      {"{", TokenKind::LBrace},    {"}", TokenKind::RBrace},
    {";", TokenKind::Semi},        {":", TokenKind::Colon},     {",", TokenKind::Comma},
    {"", TokenKind::End},
}};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_part(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "integer literal";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::End: return "end of input";
    default:
      for (const auto& p : kPunctuation) {
        if (p.kind == kind) return p.lexeme;
      }
      return "?";
  }
}

bool is_keyword(std::string_view word) {
  for (auto kw : kKeywords) {
    if (kw == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  auto advance = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (source[pos] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++pos;
    }
  };

  while (pos < source.size()) {
    const char c = source[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (source.substr(pos, 2) == "//") {
      while (pos < source.size() && source[pos] != '\n') advance(1);
      continue;
    }

    Token tok;
    tok.line = line;
    tok.column = column;

    if (ident_start(c)) {
      std::size_t end = pos;
      while (end < source.size() && ident_part(source[end])) ++end;
      tok.text = std::string(source.substr(pos, end - pos));
      tok.kind = is_keyword(tok.text) ? TokenKind::Keyword : TokenKind::Identifier;
      advance(end - pos);
      tokens.push_back(std::move(tok));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos;
      while (end < source.size() && std::isdigit(static_cast<unsigned char>(source[end]))) ++end;
      tok.kind = TokenKind::IntLiteral;
      tok.text = std::string(source.substr(pos, end - pos));
      advance(end - pos);
      tokens.push_back(std::move(tok));
      continue;
    }

    bool matched = false;
    for (const auto& p : kPunctuation) {
      if (!p.lexeme.empty() && source.substr(pos, p.lexeme.size()) == p.lexeme) {
        tok.kind = p.kind;
        tok.text = std::string(p.lexeme);
        advance(p.lexeme.size());
        tokens.push_back(std::move(tok));
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error(ErrorCode::UnknownCharacter, "unexpected character '" + std::string(1, c) +
                                                   "' at " + std::to_string(line) + ":" +
                                                   std::to_string(column));
    }
  }

  Token end;
  end.kind = TokenKind::End;
  end.line = line;
  end.column = column;
  tokens.push_back(end);
  return tokens;
}

}  // namespace flowsynth
