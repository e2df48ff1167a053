#include "greq/document.hpp"

namespace greq {

namespace {

std::string actions_cell(const Step& step) {
  std::string out;
  auto add = [&](std::string text) {
    if (!out.empty()) out += ", ";
    out += std::move(text);
  };
  if (step.actions.create) add("create");
  if (step.actions.read) add("read");
  if (step.actions.update) {
    std::string u = "update";
    if (!step.updated_attributes.empty()) {
      u += "(";
      for (size_t i = 0; i < step.updated_attributes.size(); ++i) {
        if (i > 0) u += ", ";
        u += step.updated_attributes[i];
      }
      u += ")";
    }
    add(std::move(u));
  }
  if (step.actions.remove) add("delete");
  return out;
}

void write_goal(const Model& model, const Goal& goal, int depth,
                std::string& out) {
  out += std::string(static_cast<size_t>(depth) * 2, ' ') + "- **" + goal.name +
         "**";
  std::string notes;
  if (goal.responsible) notes += "responsible: " + *goal.responsible;
  if (goal.entry) {
    if (!notes.empty()) notes += ", ";
    notes += "entry: " + *goal.entry;
  }
  if (!notes.empty()) out += " \xE2\x80\x94 " + notes;  // "—"
  out += "\n";
  for (const Goal& child : goal.children) write_goal(model, child, depth + 1, out);
}

void write_step_row(const Step& step, std::string& out) {
  out += "| " + (step.via ? *step.via : std::string("(entry)")) + " | " +
         step.entity + " | " + actions_cell(step) + " |\n";
}

}  // namespace

std::string emit_document(const Model& model, const DiagnosticReport& report) {
  std::string out = "# Requirements: " + model.source_name + "\n";

  out += "\n## 1. Enterprise\n\n";
  for (const Organization& org : model.organizations) {
    out += "- **" + org.name + "**\n";
    for (const Agent& agent : org.agents) out += "  - " + agent.name + "\n";
  }

  out += "\n## 2. Goals\n\n";
  for (const Goal& goal : model.goals) write_goal(model, goal, 0, out);

  out += "\n## 3. Information structure\n\n";
  for (const Entity& entity : model.entities) {
    out += "### " + entity.name + "\n\n";
    out += "| Attribute | Kind |\n| --- | --- |\n";
    for (const Attribute& attr : entity.attributes)
      out += "| " + attr.name + " | " + std::string(to_string(attr.kind)) + " |\n";
    out += "\n";
  }
  if (!model.relationships.empty()) {
    out += "Relationships:\n\n";
    for (const Relationship& rel : model.relationships)
      out += "- " + rel.name + ": " + rel.source + " \xE2\x86\x92 " + rel.target +
             "\n";
  }

  out += "\n## 4. Privileges\n\n";
  for (const Goal* goal : leaf_goals(model)) {
    const auto privileges = privileges_of(model, goal->name);
    if (privileges.empty()) continue;
    out += "### " + goal->name + "\n\n";
    out += "| Via | Entity | Actions |\n| --- | --- | --- |\n";
    for (const Privilege* priv : privileges) {
      write_step_row(priv->entry_step, out);
      for (const Step& step : priv->steps) write_step_row(step, out);
    }
    out += "\n";
  }

  out += "## 5. Diagnostics\n\n";
  if (report.diagnostics.empty()) {
    out += "No findings.\n";
  } else {
    out += render_report_text(report);
  }
  return out;
}

}  // namespace greq
