#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "greq/model.hpp"

namespace greq {

// Entity/relationship graph. Traversal is direction-agnostic: a privilege
// may walk a relationship from either endpoint.
struct ConceptGraph {
  std::vector<std::string> nodes;  // entity names, declaration order
  struct Edge {
    std::string relationship;
    std::string source;
    std::string target;

    bool operator==(const Edge&) const = default;
  };
  std::vector<Edge> edges;  // declaration order

  bool has_node(std::string_view name) const;
  // True iff the named relationship joins a and b, in either direction.
  bool joins(std::string_view relationship, std::string_view a,
             std::string_view b) const;
};

ConceptGraph build_graph(const Model& model);

struct WalkCheck {
  bool valid = true;
  // 0-based index into Privilege::steps of the earliest bad step; -1 if valid.
  int offending_step = -1;
};

WalkCheck walk_is_valid(const ConceptGraph& graph, const Privilege& privilege);

struct GraphError {
  std::string message;

  bool operator==(const GraphError&) const = default;
};

// Entities reachable from `from` over undirected edges, including `from`.
std::variant<std::set<std::string>, GraphError> reachable_entities(
    const ConceptGraph& graph, const std::string& from);

// A goal's partial view onto the information system: the entities its
// privilege walks visit, with the union of actions per entity.
struct GoalView {
  std::string goal;
  std::vector<std::string> entities;  // first-visit order, entry first
  std::map<std::string, ActionSet> actions_by_entity;
};

std::variant<GoalView, GraphError> goal_view(const Model& model,
                                             const std::string& goal_name);

}  // namespace greq
