#pragma once

#include <string>

#include "greq/model.hpp"

namespace greq {

// Canonical `.greq` rendering of a model: declarations grouped by kind in
// declaration order. parse_source(pretty_print(m)) reproduces m.
std::string pretty_print(const Model& model);

}  // namespace greq
