#include "greq/source.hpp"

#include <algorithm>
#include <sstream>

namespace greq {

namespace {

std::string line_of(const std::string& source, int line) {
  std::istringstream in(source);
  std::string current;
  for (int i = 1; std::getline(in, current); ++i)
    if (i == line) return current;
  return "";
}

}  // namespace

std::string format_errors(std::vector<ParseError> errors,
                          const std::string& source) {
  std::stable_sort(errors.begin(), errors.end(),
                   [](const ParseError& a, const ParseError& b) {
                     if (a.span.line != b.span.line) return a.span.line < b.span.line;
                     return a.span.column < b.span.column;
                   });
  std::string out;
  for (const ParseError& err : errors) {
    out += err.span.file + ":" + std::to_string(err.span.line) + ":" +
           std::to_string(err.span.column) + ": " + err.message;
    if (!err.expected.empty()) {
      out += " (expected ";
      for (size_t i = 0; i < err.expected.size(); ++i) {
        if (i > 0) out += ", ";
        out += err.expected[i];
      }
      out += ")";
    }
    out += "\n";
    out += line_of(source, err.span.line) + "\n";
    out += std::string(static_cast<size_t>(err.span.column - 1), ' ') +
           std::string(static_cast<size_t>(std::max(err.span.length, 1)), '^') +
           "\n";
  }
  return out;
}

}  // namespace greq
