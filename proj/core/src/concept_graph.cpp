#include "greq/concept_graph.hpp"

#include <algorithm>
#include <deque>

namespace greq {

bool ConceptGraph::has_node(std::string_view name) const {
  return std::find(nodes.begin(), nodes.end(), name) != nodes.end();
}

bool ConceptGraph::joins(std::string_view relationship, std::string_view a,
                         std::string_view b) const {
  for (const Edge& edge : edges) {
    if (edge.relationship != relationship) continue;
    if ((edge.source == a && edge.target == b) ||
        (edge.source == b && edge.target == a))
      return true;
  }
  return false;
}

ConceptGraph build_graph(const Model& model) {
  ConceptGraph graph;
  for (const Entity& entity : model.entities) graph.nodes.push_back(entity.name);
  for (const Relationship& rel : model.relationships)
    graph.edges.push_back({rel.name, rel.source, rel.target});
  return graph;
}

WalkCheck walk_is_valid(const ConceptGraph& graph, const Privilege& privilege) {
  std::string_view at = privilege.entry_step.entity;
  for (size_t i = 0; i < privilege.steps.size(); ++i) {
    const Step& step = privilege.steps[i];
    if (!step.via || !graph.joins(*step.via, at, step.entity))
      return {false, static_cast<int>(i)};
    at = step.entity;
  }
  return {true, -1};
}

std::variant<std::set<std::string>, GraphError> reachable_entities(
    const ConceptGraph& graph, const std::string& from) {
  if (!graph.has_node(from))
    return GraphError{"unknown entity '" + from + "'"};
  std::set<std::string> seen{from};
  std::deque<std::string> frontier{from};
  while (!frontier.empty()) {
    const std::string at = std::move(frontier.front());
    frontier.pop_front();
    for (const ConceptGraph::Edge& edge : graph.edges) {
      const std::string* next = nullptr;
      if (edge.source == at) next = &edge.target;
      else if (edge.target == at) next = &edge.source;
      if (next && seen.insert(*next).second) frontier.push_back(*next);
    }
  }
  return seen;
}

namespace {

void merge_step(GoalView& view, const Step& step) {
  if (std::find(view.entities.begin(), view.entities.end(), step.entity) ==
      view.entities.end())
    view.entities.push_back(step.entity);
  ActionSet& actions = view.actions_by_entity[step.entity];
  actions.create |= step.actions.create;
  actions.read |= step.actions.read;
  actions.update |= step.actions.update;
  actions.remove |= step.actions.remove;
}

}  // namespace

std::variant<GoalView, GraphError> goal_view(const Model& model,
                                             const std::string& goal_name) {
  const std::vector<const Privilege*> privileges = privileges_of(model, goal_name);
  if (privileges.empty())
    return GraphError{"goal '" + goal_name + "' has no privilege"};
  GoalView view;
  view.goal = goal_name;
  for (const Privilege* priv : privileges) {
    merge_step(view, priv->entry_step);
    for (const Step& step : priv->steps) merge_step(view, step);
  }
  return view;
}

}  // namespace greq
