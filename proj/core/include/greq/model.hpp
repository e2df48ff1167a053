#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace greq {

// The seven concepts of the requirements metamodel, resolved and immutable
// after construction. All cross-references are by name; validate_model()
// checks that every reference resolves and names are unique per kind.

enum class AttributeKind { Text, Number, Date, Boolean };

std::string_view to_string(AttributeKind kind);
std::optional<AttributeKind> attribute_kind_from_string(std::string_view s);

struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::Text;

  bool operator==(const Attribute&) const = default;
};

struct Entity {
  std::string name;
  std::vector<Attribute> attributes;

  bool has_attribute(std::string_view attr_name) const;
  bool operator==(const Entity&) const = default;
};

struct Relationship {
  std::string name;
  std::string source;  // entity name
  std::string target;  // entity name

  bool operator==(const Relationship&) const = default;
};

struct Agent {
  std::string name;

  bool operator==(const Agent&) const = default;
};

struct Organization {
  std::string name;
  std::vector<Agent> agents;

  bool operator==(const Organization&) const = default;
};

struct Goal {
  std::string name;
  std::optional<std::string> responsible;  // agent name
  std::optional<std::string> entry;        // entity name
  // A goal declared with sub-goals (or an explicitly empty `{}` body,
  // reserved for later decomposition) is composite; only leaves carry
  // privileges.
  bool composite = false;
  std::vector<Goal> children;

  bool is_leaf() const { return !composite && children.empty(); }
  bool operator==(const Goal&) const = default;
};

// One CRUD action set attached to a step of a privilege walk.
struct ActionSet {
  bool create = false;
  bool read = false;
  bool update = false;
  bool remove = false;  // "delete" in the surface syntax

  bool empty() const { return !create && !read && !update && !remove; }
  bool operator==(const ActionSet&) const = default;
};

struct Step {
  std::string entity;
  std::optional<std::string> via;  // relationship traversed; absent for entry
  ActionSet actions;
  std::vector<std::string> updated_attributes;  // meaningful iff actions.update

  bool operator==(const Step&) const = default;
};

// A goal-anchored walk through the concept graph: the goal's partial view
// onto the information system.
struct Privilege {
  std::string goal;
  Step entry_step;
  std::vector<Step> steps;

  bool operator==(const Privilege&) const = default;
};

struct Model {
  std::string source_name;
  std::vector<Organization> organizations;
  std::vector<Goal> goals;  // roots of the decomposition forest
  std::vector<Entity> entities;
  std::vector<Relationship> relationships;
  std::vector<Privilege> privileges;

  bool operator==(const Model&) const = default;
};

// Lookup helpers. Pointers remain valid while the model is alive.
const Entity* find_entity(const Model& model, std::string_view name);
const Relationship* find_relationship(const Model& model, std::string_view name);
const Agent* find_agent(const Model& model, std::string_view name);
const Goal* find_goal(const Model& model, std::string_view name);

// All goals / leaf goals in declaration (pre-)order.
std::vector<const Goal*> all_goals(const Model& model);
std::vector<const Goal*> leaf_goals(const Model& model);

// Responsible agent of a goal, falling back to the nearest ancestor that
// declares one.
std::optional<std::string> inherited_responsible(const Model& model,
                                                 std::string_view goal_name);

// Privileges attached to a goal, in declaration order.
std::vector<const Privilege*> privileges_of(const Model& model,
                                            std::string_view goal_name);

// Max nesting depth of the goal forest; 0 when there are no goals.
int goal_tree_depth(const Model& model);

// Checks every structural invariant: reference resolution, per-kind name
// uniqueness, forest shape, leaf-only privileges, action/attribute rules.
// Returns one message per violation; empty means the model is well-formed.
std::vector<std::string> validate_model(const Model& model);

}  // namespace greq
