// Random model generators for property tests. Everything is driven by a
// caller-provided mt19937 so failures reproduce from a seed.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "greq/model.hpp"

namespace greq::testing {

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

struct GenOptions {
  int max_entities = 6;
  int max_relationships = 8;
  int max_privileges = 6;
  bool valid_walks = true;      // steps follow edges of the concept graph
  bool matching_entries = true; // goal entry equals its privileges' entry
  // Drop update actions that name no attribute (keeps R008 out of the base
  // model for monotonicity properties).
  bool no_empty_updates = false;
};

inline ActionSet random_actions(std::mt19937& rng) {
  ActionSet a;
  while (a.empty()) {
    a.create = chance(rng, 0.4);
    a.read = chance(rng, 0.5);
    a.update = chance(rng, 0.4);
    a.remove = chance(rng, 0.2);
  }
  return a;
}

inline std::vector<std::string> random_updated_attributes(std::mt19937& rng,
                                                          const Entity& entity) {
  std::vector<std::string> out;
  for (const Attribute& attr : entity.attributes)
    if (chance(rng, 0.5)) out.push_back(attr.name);
  return out;
}

inline void finish_step(Step& step, const GenOptions& opts) {
  if (!step.actions.update) step.updated_attributes.clear();
  if (opts.no_empty_updates && step.actions.update &&
      step.updated_attributes.empty()) {
    step.actions.update = false;
    if (step.actions.empty()) step.actions.read = true;
  }
}

inline Model random_model(std::mt19937& rng, const GenOptions& opts = {}) {
  Model model;
  model.source_name = "generated.greq";

  const int entity_count = pick(rng, 1, opts.max_entities);
  for (int i = 0; i < entity_count; ++i) {
    Entity entity;
    entity.name = "E" + std::to_string(i);
    const int attr_count = pick(rng, 0, 3);
    for (int j = 0; j < attr_count; ++j)
      entity.attributes.push_back(
          {"a" + std::to_string(j),
           static_cast<AttributeKind>(pick(rng, 0, 3))});
    model.entities.push_back(std::move(entity));
  }

  const int rel_count = pick(rng, 0, opts.max_relationships);
  for (int i = 0; i < rel_count; ++i)
    model.relationships.push_back(
        {"r" + std::to_string(i),
         model.entities[static_cast<size_t>(pick(rng, 0, entity_count - 1))].name,
         model.entities[static_cast<size_t>(pick(rng, 0, entity_count - 1))].name});

  Organization org;
  org.name = "Org";
  const int agent_count = pick(rng, 1, 3);
  for (int i = 0; i < agent_count; ++i)
    org.agents.push_back({"A" + std::to_string(i)});
  model.organizations.push_back(std::move(org));

  // Flat two-level forest: enough shape for inheritance without bookkeeping.
  int goal_counter = 0;
  std::vector<std::string> leaves;
  const int root_count = pick(rng, 1, 3);
  for (int i = 0; i < root_count; ++i) {
    Goal root;
    root.name = "G" + std::to_string(goal_counter++);
    if (chance(rng, 0.6)) {
      root.composite = true;
      if (chance(rng, 0.4))
        root.responsible =
            model.organizations[0].agents[static_cast<size_t>(pick(rng, 0, agent_count - 1))].name;
      const int child_count = pick(rng, 1, 3);
      for (int j = 0; j < child_count; ++j) {
        Goal leaf;
        leaf.name = "G" + std::to_string(goal_counter++);
        if (chance(rng, 0.7))
          leaf.responsible =
              model.organizations[0].agents[static_cast<size_t>(pick(rng, 0, agent_count - 1))].name;
        leaves.push_back(leaf.name);
        root.children.push_back(std::move(leaf));
      }
    } else {
      root.responsible =
          model.organizations[0].agents[static_cast<size_t>(pick(rng, 0, agent_count - 1))].name;
      leaves.push_back(root.name);
    }
    model.goals.push_back(std::move(root));
  }

  auto random_entity = [&]() -> const Entity& {
    return model.entities[static_cast<size_t>(pick(rng, 0, entity_count - 1))];
  };

  std::vector<std::string> unused_leaves = leaves;
  const int priv_count = pick(rng, 0, opts.max_privileges);
  for (int i = 0; i < priv_count && !leaves.empty(); ++i) {
    Privilege priv;
    if (opts.matching_entries) {
      // One privilege per goal, so a goal's declared entry is unambiguous.
      if (unused_leaves.empty()) break;
      const size_t idx =
          static_cast<size_t>(pick(rng, 0, static_cast<int>(unused_leaves.size()) - 1));
      priv.goal = unused_leaves[idx];
      unused_leaves.erase(unused_leaves.begin() + static_cast<long>(idx));
    } else {
      priv.goal = leaves[static_cast<size_t>(pick(rng, 0, static_cast<int>(leaves.size()) - 1))];
    }
    const Entity* at = &random_entity();
    priv.entry_step = {at->name, std::nullopt, random_actions(rng),
                       random_updated_attributes(rng, *at)};
    finish_step(priv.entry_step, opts);

    const int step_count = pick(rng, 0, 3);
    for (int s = 0; s < step_count; ++s) {
      if (opts.valid_walks) {
        std::vector<const Relationship*> incident;
        for (const Relationship& rel : model.relationships)
          if (rel.source == at->name || rel.target == at->name)
            incident.push_back(&rel);
        if (incident.empty()) break;
        const Relationship* rel =
            incident[static_cast<size_t>(pick(rng, 0, static_cast<int>(incident.size()) - 1))];
        const std::string next = rel->source == at->name ? rel->target : rel->source;
        at = find_entity(model, next);
        Step step{at->name, rel->name, random_actions(rng),
                  random_updated_attributes(rng, *at)};
        finish_step(step, opts);
        priv.steps.push_back(std::move(step));
      } else {
        if (model.relationships.empty()) break;
        const Relationship& rel =
            model.relationships[static_cast<size_t>(pick(rng, 0, rel_count - 1))];
        const Entity& next = random_entity();
        Step step{next.name, rel.name, random_actions(rng),
                  random_updated_attributes(rng, next)};
        finish_step(step, opts);
        priv.steps.push_back(std::move(step));
        at = &next;
      }
    }
    model.privileges.push_back(std::move(priv));
  }

  if (opts.matching_entries) {
    // Align each privileged goal's declared entry with its first privilege.
    for (const Privilege& priv : model.privileges)
      for (Goal& root : model.goals) {
        if (root.name == priv.goal && !root.composite)
          root.entry = priv.entry_step.entity;
        for (Goal& child : root.children)
          if (child.name == priv.goal) child.entry = priv.entry_step.entity;
      }
  }

  return model;
}

}  // namespace greq::testing
