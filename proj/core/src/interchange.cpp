#include "greq/interchange.hpp"

#include <json.hpp>

namespace greq {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json actions_to_json(const ActionSet& actions) {
  ordered_json out = ordered_json::array();
  if (actions.create) out.push_back("create");
  if (actions.read) out.push_back("read");
  if (actions.update) out.push_back("update");
  if (actions.remove) out.push_back("delete");
  return out;
}

ordered_json step_to_json(const Step& step) {
  ordered_json out;
  out["entity"] = step.entity;
  out["via"] = step.via ? ordered_json(*step.via) : ordered_json(nullptr);
  out["actions"] = actions_to_json(step.actions);
  out["updated_attributes"] = step.updated_attributes;
  return out;
}

ordered_json goal_to_json(const Goal& goal) {
  ordered_json out;
  out["name"] = goal.name;
  out["responsible"] =
      goal.responsible ? ordered_json(*goal.responsible) : ordered_json(nullptr);
  out["entry"] = goal.entry ? ordered_json(*goal.entry) : ordered_json(nullptr);
  out["composite"] = goal.composite;
  ordered_json children = ordered_json::array();
  for (const Goal& child : goal.children) children.push_back(goal_to_json(child));
  out["children"] = std::move(children);
  return out;
}

}  // namespace

std::string canonical_serialize(const Model& model) {
  ordered_json doc;
  doc["source_name"] = model.source_name;

  ordered_json orgs = ordered_json::array();
  for (const Organization& org : model.organizations) {
    ordered_json o;
    o["name"] = org.name;
    ordered_json agents = ordered_json::array();
    for (const Agent& agent : org.agents) agents.push_back({{"name", agent.name}});
    o["agents"] = std::move(agents);
    orgs.push_back(std::move(o));
  }
  doc["organizations"] = std::move(orgs);

  ordered_json goals = ordered_json::array();
  for (const Goal& goal : model.goals) goals.push_back(goal_to_json(goal));
  doc["goals"] = std::move(goals);

  ordered_json entities = ordered_json::array();
  for (const Entity& entity : model.entities) {
    ordered_json e;
    e["name"] = entity.name;
    ordered_json attrs = ordered_json::array();
    for (const Attribute& attr : entity.attributes)
      attrs.push_back({{"name", attr.name}, {"kind", to_string(attr.kind)}});
    e["attributes"] = std::move(attrs);
    entities.push_back(std::move(e));
  }
  doc["entities"] = std::move(entities);

  ordered_json rels = ordered_json::array();
  for (const Relationship& rel : model.relationships)
    rels.push_back(
        {{"name", rel.name}, {"source", rel.source}, {"target", rel.target}});
  doc["relationships"] = std::move(rels);

  ordered_json privs = ordered_json::array();
  for (const Privilege& priv : model.privileges) {
    ordered_json p;
    p["goal"] = priv.goal;
    p["entry_step"] = step_to_json(priv.entry_step);
    ordered_json steps = ordered_json::array();
    for (const Step& step : priv.steps) steps.push_back(step_to_json(step));
    p["steps"] = std::move(steps);
    privs.push_back(std::move(p));
  }
  doc["privileges"] = std::move(privs);

  return doc.dump(2) + "\n";
}

namespace {

struct BadDocument {
  std::string message;
};

const ordered_json& field(const ordered_json& obj, const char* key,
                          const char* context) {
  if (!obj.is_object() || !obj.contains(key))
    throw BadDocument{std::string(context) + ": missing key '" + key + "'"};
  return obj.at(key);
}

std::string string_field(const ordered_json& obj, const char* key,
                         const char* context) {
  const ordered_json& v = field(obj, key, context);
  if (!v.is_string())
    throw BadDocument{std::string(context) + ": '" + key + "' must be a string"};
  return v.get<std::string>();
}

std::optional<std::string> optional_string_field(const ordered_json& obj,
                                                 const char* key,
                                                 const char* context) {
  const ordered_json& v = field(obj, key, context);
  if (v.is_null()) return std::nullopt;
  if (!v.is_string())
    throw BadDocument{std::string(context) + ": '" + key +
                      "' must be a string or null"};
  return v.get<std::string>();
}

const ordered_json& array_field(const ordered_json& obj, const char* key,
                                const char* context) {
  const ordered_json& v = field(obj, key, context);
  if (!v.is_array())
    throw BadDocument{std::string(context) + ": '" + key + "' must be an array"};
  return v;
}

Step step_from_json(const ordered_json& j, const char* context) {
  Step step;
  step.entity = string_field(j, "entity", context);
  step.via = optional_string_field(j, "via", context);
  for (const ordered_json& a : array_field(j, "actions", context)) {
    if (!a.is_string()) throw BadDocument{std::string(context) + ": bad action"};
    const std::string name = a.get<std::string>();
    if (name == "create") step.actions.create = true;
    else if (name == "read") step.actions.read = true;
    else if (name == "update") step.actions.update = true;
    else if (name == "delete") step.actions.remove = true;
    else throw BadDocument{std::string(context) + ": unknown action '" + name + "'"};
  }
  for (const ordered_json& u : array_field(j, "updated_attributes", context)) {
    if (!u.is_string())
      throw BadDocument{std::string(context) + ": bad updated_attributes entry"};
    step.updated_attributes.push_back(u.get<std::string>());
  }
  return step;
}

Goal goal_from_json(const ordered_json& j) {
  Goal goal;
  goal.name = string_field(j, "name", "goal");
  goal.responsible = optional_string_field(j, "responsible", "goal");
  goal.entry = optional_string_field(j, "entry", "goal");
  const ordered_json& composite = field(j, "composite", "goal");
  if (!composite.is_boolean())
    throw BadDocument{"goal: 'composite' must be a boolean"};
  goal.composite = composite.get<bool>();
  for (const ordered_json& child : array_field(j, "children", "goal"))
    goal.children.push_back(goal_from_json(child));
  return goal;
}

Model model_from_json(const ordered_json& doc) {
  Model model;
  model.source_name = string_field(doc, "source_name", "document");

  for (const ordered_json& o : array_field(doc, "organizations", "document")) {
    Organization org;
    org.name = string_field(o, "name", "organization");
    for (const ordered_json& a : array_field(o, "agents", "organization"))
      org.agents.push_back({string_field(a, "name", "agent")});
    model.organizations.push_back(std::move(org));
  }
  for (const ordered_json& g : array_field(doc, "goals", "document"))
    model.goals.push_back(goal_from_json(g));
  for (const ordered_json& e : array_field(doc, "entities", "document")) {
    Entity entity;
    entity.name = string_field(e, "name", "entity");
    for (const ordered_json& a : array_field(e, "attributes", "entity")) {
      const std::string kind = string_field(a, "kind", "attribute");
      auto parsed = attribute_kind_from_string(kind);
      if (!parsed) throw BadDocument{"attribute: unknown kind '" + kind + "'"};
      entity.attributes.push_back({string_field(a, "name", "attribute"), *parsed});
    }
    model.entities.push_back(std::move(entity));
  }
  for (const ordered_json& r : array_field(doc, "relationships", "document"))
    model.relationships.push_back({string_field(r, "name", "relationship"),
                                   string_field(r, "source", "relationship"),
                                   string_field(r, "target", "relationship")});
  for (const ordered_json& p : array_field(doc, "privileges", "document")) {
    Privilege priv;
    priv.goal = string_field(p, "goal", "privilege");
    priv.entry_step = step_from_json(field(p, "entry_step", "privilege"), "entry_step");
    for (const ordered_json& s : array_field(p, "steps", "privilege"))
      priv.steps.push_back(step_from_json(s, "step"));
    model.privileges.push_back(std::move(priv));
  }
  return model;
}

}  // namespace

DeserializeResult canonical_deserialize(const std::string& document) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    return std::vector<InterchangeError>{
        {static_cast<long>(e.byte), e.what()}};
  }

  Model model;
  try {
    model = model_from_json(doc);
  } catch (const BadDocument& bad) {
    return std::vector<InterchangeError>{{-1, bad.message}};
  }

  std::vector<std::string> violations = validate_model(model);
  if (!violations.empty()) {
    std::vector<InterchangeError> errors;
    errors.reserve(violations.size());
    for (std::string& v : violations) errors.push_back({-1, std::move(v)});
    return errors;
  }
  return model;
}

}  // namespace greq
