#pragma once

#include <string>
#include <vector>

#include "greq/model.hpp"
#include "greq/source.hpp"

namespace greq {

struct ParseResult {
  Model model;  // meaningful only when ok()
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty(); }
};

// Parses `.greq` source into a resolved Model. Recovers at statement level
// and reports every error it can find, not just the first. Declarations may
// appear in any order; references are resolved in a second pass.
ParseResult parse_source(const std::string& source, const std::string& file_name);

}  // namespace greq
