#pragma once

#include <string>
#include <vector>

#include "greq/source.hpp"

namespace greq {

enum class TokenKind {
  Identifier,  // bare word, possibly a keyword
  String,      // quoted name, unescaped text
  LBrace,
  RBrace,
  LParen,
  RParen,
  Colon,
  Comma,
  Arrow,  // ->
  EndOfFile,
};

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string text;  // identifier text or unquoted string contents
  SourceSpan span;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an EndOfFile token
  std::vector<ParseError> errors;
};

// Column/length are counted in code points so caret underlines line up.
LexResult lex(const std::string& source, const std::string& file_name);

bool is_keyword(const std::string& word);

}  // namespace greq
