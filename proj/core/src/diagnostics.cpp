#include "greq/diagnostics.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include <json.hpp>

#include "greq/concept_graph.hpp"

namespace greq {

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

bool DiagnosticReport::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::vector<std::string> DiagnosticReport::error_rule_ids() const {
  std::set<std::string> ids;
  for (const Diagnostic& d : diagnostics)
    if (d.severity == Severity::Error) ids.insert(d.rule_id);
  return {ids.begin(), ids.end()};
}

namespace {

Diagnostic make(const char* id, Severity severity, std::string kind,
                std::string name, std::string message) {
  return {id, severity, std::move(kind), std::move(name), std::move(message)};
}

bool step_touches(const Privilege& priv, std::string_view entity) {
  if (priv.entry_step.entity == entity) return true;
  return std::any_of(priv.steps.begin(), priv.steps.end(),
                     [&](const Step& s) { return s.entity == entity; });
}

void for_each_step(const Privilege& priv,
                   const std::function<void(const Step&)>& fn) {
  fn(priv.entry_step);
  for (const Step& step : priv.steps) fn(step);
}

std::vector<Rule> make_default_rules() {
  std::vector<Rule> rules;

  rules.push_back({"R001", Severity::Error,
                   [](const Model& m, std::vector<Diagnostic>& out) {
                                          for (const Organization& org : m.organizations)
                       for (const Agent& agent : org.agents) {
                         const auto goals = all_goals(m);
                         const bool responsible = std::any_of(
                             goals.begin(), goals.end(), [&](const Goal* g) {
                               return g->responsible == agent.name;
                             });
                         if (!responsible)
                           out.push_back(make("R001", Severity::Error, "agent", agent.name,
                                              "agent is responsible for no goal"));
                       }
                   }});

  rules.push_back({"R002", Severity::Error,
                   [](const Model& m, std::vector<Diagnostic>& out) {
                                          for (const Goal* goal : leaf_goals(m))
                       if (privileges_of(m, goal->name).empty())
                         out.push_back(make("R002", Severity::Error, "goal", goal->name,
                                            "leaf goal grants no access to the "
                                            "information system"));
                   }});

  rules.push_back({"R003", Severity::Error,
                   [](const Model& m, std::vector<Diagnostic>& out) {
                                          for (const Goal* goal : leaf_goals(m))
                       if (!inherited_responsible(m, goal->name))
                         out.push_back(make("R003", Severity::Error, "goal", goal->name,
                                            "leaf goal has no responsible agent"));
                   }});

  rules.push_back(
      {"R004", Severity::Error, [](const Model& m, std::vector<Diagnostic>& out) {
                  const ConceptGraph graph = build_graph(m);
         for (const Privilege& priv : m.privileges) {
           const WalkCheck check = walk_is_valid(graph, priv);
           if (!check.valid)
             out.push_back(make(
                 "R004", Severity::Error, "privilege", priv.goal,
                 "walk leaves the concept graph at step " +
                     std::to_string(check.offending_step) + " (relationship '" +
                     priv.steps[static_cast<size_t>(check.offending_step)]
                         .via.value_or("?") +
                     "' does not join the entities)"));
         }
       }});

  rules.push_back({"R005", Severity::Error,
                   [](const Model& m, std::vector<Diagnostic>& out) {
                                          for (const Privilege& priv : m.privileges) {
                       const Goal* goal = find_goal(m, priv.goal);
                       if (goal && goal->entry &&
                           *goal->entry != priv.entry_step.entity)
                         out.push_back(make("R005", Severity::Error, "privilege", priv.goal,
                                            "privilege enters at '" +
                                                priv.entry_step.entity +
                                                "' but the goal declares entry '" +
                                                *goal->entry + "'"));
                     }
                   }});

  rules.push_back({"R006", Severity::Warning,
                   [](const Model& m, std::vector<Diagnostic>& out) {
                                          for (const Entity& entity : m.entities) {
                       const bool touched = std::any_of(
                           m.privileges.begin(), m.privileges.end(),
                           [&](const Privilege& p) {
                             return step_touches(p, entity.name);
                           });
                       if (!touched)
                         out.push_back(make("R006", Severity::Warning, "entity", entity.name,
                                            "entity is touched by no privilege step"));
                     }
                   }});

  rules.push_back({"R007", Severity::Warning,
                   [](const Model& m, std::vector<Diagnostic>& out) {
                                          for (const Goal* goal : all_goals(m))
                       if (goal->composite && goal->children.empty())
                         out.push_back(make("R007", Severity::Warning, "goal", goal->name,
                                            "composite goal has no sub-goal"));
                   }});

  rules.push_back({"R008", Severity::Warning,
                   [](const Model& m, std::vector<Diagnostic>& out) {
                                          for (const Privilege& priv : m.privileges)
                       for_each_step(priv, [&](const Step& step) {
                         if (step.actions.update && step.updated_attributes.empty())
                           out.push_back(make("R008", Severity::Warning, "privilege", priv.goal,
                                              "update on '" + step.entity +
                                                  "' names no attribute"));
                       });
                   }});

  return rules;
}

}  // namespace

const std::vector<Rule>& default_rules() {
  static const std::vector<Rule> rules = make_default_rules();
  return rules;
}

DiagnosticReport run_diagnostics(const Model& model) {
  return run_diagnostics(model, default_rules());
}

DiagnosticReport run_diagnostics(const Model& model,
                                 const std::vector<Rule>& rules) {
  DiagnosticReport report;
  report.model_name = model.source_name;
  for (const Rule& rule : rules) rule.check(model, report.diagnostics);
  std::sort(report.diagnostics.begin(), report.diagnostics.end(),
            [](const Diagnostic& a, const Diagnostic& b) {
              return std::tie(a.rule_id, a.subject_kind, a.subject_name, a.message) <
                     std::tie(b.rule_id, b.subject_kind, b.subject_name, b.message);
            });
  return report;
}

std::string render_report_text(const DiagnosticReport& report) {
  std::string out;
  for (const Diagnostic& d : report.diagnostics)
    out += d.rule_id + " " + std::string(to_string(d.severity)) + " " +
           d.subject_kind + " '" + d.subject_name + "': " + d.message + "\n";
  return out;
}

std::string render_report_json(const DiagnosticReport& report) {
  nlohmann::ordered_json doc;
  doc["model_name"] = report.model_name;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const Diagnostic& d : report.diagnostics) {
    nlohmann::ordered_json item;
    item["rule_id"] = d.rule_id;
    item["severity"] = to_string(d.severity);
    item["subject"] = {{"kind", d.subject_kind}, {"name", d.subject_name}};
    item["message"] = d.message;
    items.push_back(std::move(item));
  }
  doc["diagnostics"] = std::move(items);
  return doc.dump(2) + "\n";
}

}  // namespace greq
