#pragma once

#include <string>
#include <vector>

namespace greq {

struct SourceSpan {
  std::string file;
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 1;

  bool operator==(const SourceSpan&) const = default;
};

struct ParseError {
  SourceSpan span;
  std::string message;
  std::vector<std::string> expected;

  bool operator==(const ParseError&) const = default;
};

// Renders one block per error: "file:line:col: message", the offending
// source line, and a caret underline. Errors ordered by (line, column).
std::string format_errors(std::vector<ParseError> errors,
                          const std::string& source);

}  // namespace greq
