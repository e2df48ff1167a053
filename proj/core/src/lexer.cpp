#include "greq/lexer.hpp"

#include <array>
#include <cctype>

namespace greq {

bool is_keyword(const std::string& word) {
  static const std::array<const char*, 18> kKeywords = {
      "organization", "agent",  "goal",   "responsible", "entry",   "entity",
      "attribute",    "text",   "number", "date",        "boolean", "relationship",
      "privilege",    "for",    "step",   "create",      "read",    "update"};
  for (const char* kw : kKeywords)
    if (word == kw) return true;
  return word == "delete";
}

namespace {

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool is_ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

class Lexer {
 public:
  Lexer(const std::string& source, std::string file)
      : src_(source), file_(std::move(file)) {}

  LexResult run() {
    LexResult result;
    while (pos_ < src_.size()) {
      if (skip_trivia(result)) continue;
      if (pos_ >= src_.size()) break;
      result.tokens.push_back(next_token(result));
    }
    result.tokens.push_back({TokenKind::EndOfFile, "", span_here(1)});
    return result;
  }

 private:
  SourceSpan span_here(int length) const { return {file_, line_, column_, length}; }

  // One UTF-8 code point forward; continuation bytes do not advance column.
  void advance() {
    if (pos_ >= src_.size()) return;
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
      ++pos_;
      return;
    }
    ++pos_;
    while (pos_ < src_.size() &&
           (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80)
      ++pos_;
    ++column_;
  }

  char peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  // Returns true if whitespace or a comment was consumed.
  bool skip_trivia(LexResult& result) {
    const char c = peek();
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      return true;
    }
    if (c == '/' && peek(1) == '/') {
      while (pos_ < src_.size() && peek() != '\n') advance();
      return true;
    }
    if (c == '/' && peek(1) == '*') {
      const SourceSpan start = span_here(2);
      advance();
      advance();
      while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
      if (pos_ >= src_.size()) {
        result.errors.push_back({start, "unterminated block comment", {}});
      } else {
        advance();
        advance();
      }
      return true;
    }
    return false;
  }

  Token next_token(LexResult& result) {
    const SourceSpan start = span_here(1);
    const char c = peek();

    switch (c) {
      case '{': advance(); return {TokenKind::LBrace, "{", start};
      case '}': advance(); return {TokenKind::RBrace, "}", start};
      case '(': advance(); return {TokenKind::LParen, "(", start};
      case ')': advance(); return {TokenKind::RParen, ")", start};
      case ':': advance(); return {TokenKind::Colon, ":", start};
      case ',': advance(); return {TokenKind::Comma, ",", start};
      default: break;
    }
    if (c == '-' && peek(1) == '>') {
      advance();
      advance();
      SourceSpan span = start;
      span.length = 2;
      return {TokenKind::Arrow, "->", span};
    }
    if (c == '"') return lex_string(result);
    if (is_ident_start(static_cast<unsigned char>(c))) return lex_identifier();

    result.errors.push_back(
        {start, std::string("unexpected character '") + c + "'", {}});
    advance();
    return next_or_eof(result);
  }

  // After dropping a bad character, continue with whatever follows.
  Token next_or_eof(LexResult& result) {
    while (pos_ < src_.size()) {
      if (skip_trivia(result)) continue;
      return next_token(result);
    }
    return {TokenKind::EndOfFile, "", span_here(1)};
  }

  Token lex_identifier() {
    const SourceSpan start = span_here(1);
    const size_t begin = pos_;
    const int begin_col = column_;
    while (pos_ < src_.size() &&
           is_ident_char(static_cast<unsigned char>(peek())))
      advance();
    SourceSpan span = start;
    span.length = column_ - begin_col;
    return {TokenKind::Identifier, src_.substr(begin, pos_ - begin), span};
  }

  Token lex_string(LexResult& result) {
    const SourceSpan start = span_here(1);
    const int begin_col = column_;
    advance();  // opening quote
    std::string text;
    while (pos_ < src_.size() && peek() != '"' && peek() != '\n') {
      if (peek() == '\\' && (peek(1) == '"' || peek(1) == '\\')) {
        advance();
        text += peek();
        advance();
        continue;
      }
      const size_t begin = pos_;
      advance();
      text += src_.substr(begin, pos_ - begin);
    }
    SourceSpan span = start;
    if (pos_ >= src_.size() || peek() == '\n') {
      span.length = column_ - begin_col;
      result.errors.push_back({span, "unterminated string literal", {}});
    } else {
      advance();  // closing quote
      span.length = column_ - begin_col;
    }
    return {TokenKind::String, text, span};
  }

  const std::string& src_;
  std::string file_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

LexResult lex(const std::string& source, const std::string& file_name) {
  return Lexer(source, file_name).run();
}

}  // namespace greq
