#pragma once

#include <functional>
#include <string>
#include <vector>

#include "greq/model.hpp"

namespace greq {

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

struct Diagnostic {
  std::string rule_id;  // R###
  Severity severity = Severity::Error;
  std::string subject_kind;  // agent | goal | privilege | entity
  std::string subject_name;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

struct DiagnosticReport {
  std::string model_name;
  // Ordered by (rule_id, subject kind, subject name).
  std::vector<Diagnostic> diagnostics;

  bool has_errors() const;
  std::vector<std::string> error_rule_ids() const;  // sorted, unique
};

// A registered constraint. Checks append findings; ordering is handled by
// the runner.
struct Rule {
  std::string id;
  Severity severity;
  std::function<void(const Model&, std::vector<Diagnostic>&)> check;
};

// The built-in registry, R001..R008.
const std::vector<Rule>& default_rules();

DiagnosticReport run_diagnostics(const Model& model);
DiagnosticReport run_diagnostics(const Model& model,
                                 const std::vector<Rule>& rules);

// One line per diagnostic: "RULE severity kind 'name': message".
std::string render_report_text(const DiagnosticReport& report);
std::string render_report_json(const DiagnosticReport& report);

}  // namespace greq
