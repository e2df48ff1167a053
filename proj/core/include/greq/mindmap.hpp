#pragma once

#include <string>
#include <variant>

#include "greq/model.hpp"

namespace greq {

enum class MapFormat { Dot, Freemind };

// full: everything; concepts_only: the entity/relationship vocabulary;
// goals_of_agent: one agent's goals and their privileges.
struct MapFilter {
  enum class Mode { Full, ConceptsOnly, GoalsOfAgent };
  Mode mode = Mode::Full;
  std::string agent;  // meaningful for GoalsOfAgent

  static MapFilter full() { return {}; }
  static MapFilter concepts_only() { return {Mode::ConceptsOnly, {}}; }
  static MapFilter goals_of_agent(std::string name) {
    return {Mode::GoalsOfAgent, std::move(name)};
  }
};

struct MindmapError {
  std::string message;

  bool operator==(const MindmapError&) const = default;
};

// Byte-deterministic concept-map rendering. Node identifiers are derived
// from element names ("kind:name"), never from container iteration order.
std::variant<std::string, MindmapError> emit_mindmap(const Model& model,
                                                     const MapFilter& filter,
                                                     MapFormat format);

}  // namespace greq
