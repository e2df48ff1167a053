#include "greq/model.hpp"

#include <algorithm>
#include <set>

namespace greq {

std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::Text: return "text";
    case AttributeKind::Number: return "number";
    case AttributeKind::Date: return "date";
    case AttributeKind::Boolean: return "boolean";
  }
  return "text";
}

std::optional<AttributeKind> attribute_kind_from_string(std::string_view s) {
  if (s == "text") return AttributeKind::Text;
  if (s == "number") return AttributeKind::Number;
  if (s == "date") return AttributeKind::Date;
  if (s == "boolean") return AttributeKind::Boolean;
  return std::nullopt;
}

bool Entity::has_attribute(std::string_view attr_name) const {
  return std::any_of(attributes.begin(), attributes.end(),
                     [&](const Attribute& a) { return a.name == attr_name; });
}

const Entity* find_entity(const Model& model, std::string_view name) {
  for (const Entity& e : model.entities)
    if (e.name == name) return &e;
  return nullptr;
}

const Relationship* find_relationship(const Model& model, std::string_view name) {
  for (const Relationship& r : model.relationships)
    if (r.name == name) return &r;
  return nullptr;
}

const Agent* find_agent(const Model& model, std::string_view name) {
  for (const Organization& org : model.organizations)
    for (const Agent& a : org.agents)
      if (a.name == name) return &a;
  return nullptr;
}

namespace {

void collect_goals(const Goal& goal, std::vector<const Goal*>& out) {
  out.push_back(&goal);
  for (const Goal& child : goal.children) collect_goals(child, out);
}

// Pre-order walk carrying the nearest declared responsible agent.
const Goal* find_with_responsible(const Goal& goal, std::string_view name,
                                  std::optional<std::string> inherited,
                                  std::optional<std::string>* out) {
  if (goal.responsible) inherited = goal.responsible;
  if (goal.name == name) {
    if (out) *out = inherited;
    return &goal;
  }
  for (const Goal& child : goal.children)
    if (const Goal* hit = find_with_responsible(child, name, inherited, out))
      return hit;
  return nullptr;
}

int depth_of(const Goal& goal) {
  int best = 0;
  for (const Goal& child : goal.children) best = std::max(best, depth_of(child));
  return best + 1;
}

}  // namespace

std::vector<const Goal*> all_goals(const Model& model) {
  std::vector<const Goal*> out;
  for (const Goal& g : model.goals) collect_goals(g, out);
  return out;
}

std::vector<const Goal*> leaf_goals(const Model& model) {
  std::vector<const Goal*> out;
  for (const Goal* g : all_goals(model))
    if (g->is_leaf()) out.push_back(g);
  return out;
}

const Goal* find_goal(const Model& model, std::string_view name) {
  for (const Goal& root : model.goals)
    if (const Goal* hit = find_with_responsible(root, name, std::nullopt, nullptr))
      return hit;
  return nullptr;
}

std::optional<std::string> inherited_responsible(const Model& model,
                                                 std::string_view goal_name) {
  for (const Goal& root : model.goals) {
    std::optional<std::string> resolved;
    if (find_with_responsible(root, goal_name, std::nullopt, &resolved))
      return resolved;
  }
  return std::nullopt;
}

std::vector<const Privilege*> privileges_of(const Model& model,
                                            std::string_view goal_name) {
  std::vector<const Privilege*> out;
  for (const Privilege& p : model.privileges)
    if (p.goal == goal_name) out.push_back(&p);
  return out;
}

int goal_tree_depth(const Model& model) {
  int best = 0;
  for (const Goal& root : model.goals) best = std::max(best, depth_of(root));
  return best;
}

namespace {

void check_step(const Model& model, const Step& step, const std::string& where,
                bool is_entry, std::vector<std::string>& errors) {
  const Entity* entity = find_entity(model, step.entity);
  if (!entity) {
    errors.push_back(where + ": unknown entity '" + step.entity + "'");
  } else {
    for (const std::string& attr : step.updated_attributes)
      if (!entity->has_attribute(attr))
        errors.push_back(where + ": entity '" + entity->name +
                         "' has no attribute '" + attr + "'");
  }
  if (is_entry) {
    if (step.via)
      errors.push_back(where + ": entry step may not name a relationship");
  } else if (!step.via) {
    errors.push_back(where + ": step must name the relationship traversed");
  } else if (!find_relationship(model, *step.via)) {
    errors.push_back(where + ": unknown relationship '" + *step.via + "'");
  }
  if (step.actions.empty())
    errors.push_back(where + ": action set must not be empty");
}

void check_goal(const Model& model, const Goal& goal,
                std::vector<std::string>& errors) {
  if (goal.name.empty()) errors.push_back("goal with empty name");
  if (!goal.children.empty() && !goal.composite)
    errors.push_back("goal '" + goal.name +
                     "' has children but is not marked composite");
  if (goal.composite && goal.children.empty() && (goal.responsible || goal.entry))
    errors.push_back("childless composite goal '" + goal.name +
                     "' may not declare responsible or entry");
  if (goal.responsible && !find_agent(model, *goal.responsible))
    errors.push_back("goal '" + goal.name + "': unknown agent '" +
                     *goal.responsible + "'");
  if (goal.entry && !find_entity(model, *goal.entry))
    errors.push_back("goal '" + goal.name + "': unknown entity '" + *goal.entry +
                     "'");
  for (const Goal& child : goal.children) check_goal(model, child, errors);
}

}  // namespace

std::vector<std::string> validate_model(const Model& model) {
  std::vector<std::string> errors;

  std::set<std::string> seen;
  auto check_unique = [&](const std::string& kind, const std::string& name) {
    if (name.empty()) {
      errors.push_back(kind + " with empty name");
      return;
    }
    if (!seen.insert(kind + "\x1f" + name).second)
      errors.push_back("duplicate " + kind + " name '" + name + "'");
  };

  for (const Organization& org : model.organizations) {
    check_unique("organization", org.name);
    for (const Agent& agent : org.agents) check_unique("agent", agent.name);
  }
  for (const Goal* goal : all_goals(model)) check_unique("goal", goal->name);
  for (const Entity& entity : model.entities) {
    check_unique("entity", entity.name);
    std::set<std::string> attrs;
    for (const Attribute& attr : entity.attributes) {
      if (attr.name.empty())
        errors.push_back("entity '" + entity.name + "': attribute with empty name");
      else if (!attrs.insert(attr.name).second)
        errors.push_back("entity '" + entity.name + "': duplicate attribute '" +
                         attr.name + "'");
    }
  }
  for (const Relationship& rel : model.relationships) {
    check_unique("relationship", rel.name);
    if (!find_entity(model, rel.source))
      errors.push_back("relationship '" + rel.name + "': unknown entity '" +
                       rel.source + "'");
    if (!find_entity(model, rel.target))
      errors.push_back("relationship '" + rel.name + "': unknown entity '" +
                       rel.target + "'");
  }

  for (const Goal& root : model.goals) check_goal(model, root, errors);

  for (const Privilege& priv : model.privileges) {
    const std::string where = "privilege for '" + priv.goal + "'";
    const Goal* goal = find_goal(model, priv.goal);
    if (!goal)
      errors.push_back(where + ": unknown goal");
    else if (!goal->is_leaf())
      errors.push_back(where + ": privileges may attach only to leaf goals");
    check_step(model, priv.entry_step, where, /*is_entry=*/true, errors);
    for (const Step& step : priv.steps)
      check_step(model, step, where, /*is_entry=*/false, errors);
  }

  return errors;
}

}  // namespace greq
