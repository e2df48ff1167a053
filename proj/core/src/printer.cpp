#include "greq/printer.hpp"

#include <cctype>

#include "greq/lexer.hpp"

namespace greq {

namespace {

bool is_plain_identifier(const std::string& name) {
  if (name.empty() || is_keyword(name)) return false;
  unsigned char first = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(first) || first == '_' || first >= 0x80)) return false;
  for (unsigned char c : name)
    if (!(std::isalnum(c) || c == '_' || c >= 0x80)) return false;
  return true;
}

std::string quoted(const std::string& name) {
  if (is_plain_identifier(name)) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string indent(int depth) { return std::string(static_cast<size_t>(depth) * 2, ' '); }

void print_actions(std::string& out, const Step& step) {
  out += "{";
  bool first = true;
  auto add = [&](const std::string& text) {
    if (!first) out += ", ";
    out += text;
    first = false;
  };
  if (step.actions.create) add("create");
  if (step.actions.read) add("read");
  if (step.actions.update) {
    std::string update = "update";
    if (!step.updated_attributes.empty()) {
      update += "(";
      for (size_t i = 0; i < step.updated_attributes.size(); ++i) {
        if (i > 0) update += ", ";
        update += quoted(step.updated_attributes[i]);
      }
      update += ")";
    }
    add(update);
  }
  if (step.actions.remove) add("delete");
  out += "}";
}

void print_goal(std::string& out, const Goal& goal, int depth) {
  out += indent(depth) + "goal " + quoted(goal.name);
  if (goal.is_leaf() && !goal.responsible && !goal.entry) {
    out += "\n";
    return;
  }
  out += " {\n";
  if (goal.responsible)
    out += indent(depth + 1) + "responsible: " + quoted(*goal.responsible) + "\n";
  if (goal.entry) out += indent(depth + 1) + "entry: " + quoted(*goal.entry) + "\n";
  for (const Goal& child : goal.children) print_goal(out, child, depth + 1);
  out += indent(depth) + "}\n";
}

}  // namespace

std::string pretty_print(const Model& model) {
  std::string out;
  auto blank_before = [&] {
    if (!out.empty()) out += "\n";
  };

  for (const Organization& org : model.organizations) {
    blank_before();
    out += "organization " + quoted(org.name) + " {\n";
    for (const Agent& agent : org.agents)
      out += indent(1) + "agent " + quoted(agent.name) + "\n";
    out += "}\n";
  }
  for (const Goal& goal : model.goals) {
    blank_before();
    print_goal(out, goal, 0);
  }
  for (const Entity& entity : model.entities) {
    blank_before();
    out += "entity " + quoted(entity.name) + " {\n";
    for (const Attribute& attr : entity.attributes)
      out += indent(1) + "attribute " + quoted(attr.name) + ": " +
             std::string(to_string(attr.kind)) + "\n";
    out += "}\n";
  }
  if (!model.relationships.empty()) {
    blank_before();
    for (const Relationship& rel : model.relationships)
      out += "relationship " + quoted(rel.name) + ": " + quoted(rel.source) +
             " -> " + quoted(rel.target) + "\n";
  }
  for (const Privilege& priv : model.privileges) {
    blank_before();
    out += "privilege for " + quoted(priv.goal) + " {\n";
    out += indent(1) + "entry " + quoted(priv.entry_step.entity) + " ";
    print_actions(out, priv.entry_step);
    out += "\n";
    for (const Step& step : priv.steps) {
      out += indent(1) + "step " + quoted(step.via.value_or("?")) + " -> " +
             quoted(step.entity) + " ";
      print_actions(out, step);
      out += "\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace greq
