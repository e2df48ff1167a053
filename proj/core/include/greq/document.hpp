#pragma once

#include <string>

#include "greq/diagnostics.hpp"
#include "greq/model.hpp"

namespace greq {

// Generates the requirements document (Markdown) from the model and its
// diagnostic report. Section order is fixed: enterprise, goals, information
// structure, privileges, diagnostics.
std::string emit_document(const Model& model, const DiagnosticReport& report);

}  // namespace greq
