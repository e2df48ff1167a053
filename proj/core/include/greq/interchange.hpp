#pragma once

#include <string>
#include <variant>
#include <vector>

#include "greq/model.hpp"

namespace greq {

// Canonical `.greq.json` interchange form: fixed key order, 2-space indent,
// LF, trailing newline. Byte-deterministic for a given model.
std::string canonical_serialize(const Model& model);

struct InterchangeError {
  // Byte offset into the document for syntax errors, -1 for structural and
  // invariant violations.
  long byte_offset = -1;
  std::string message;

  bool operator==(const InterchangeError&) const = default;
};

using DeserializeResult = std::variant<Model, std::vector<InterchangeError>>;

// Inverse of canonical_serialize on its image; re-checks every model
// invariant before handing the model back.
DeserializeResult canonical_deserialize(const std::string& document);

}  // namespace greq
