#include "greq/mindmap.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace greq {

namespace {

struct MapNode {
  std::string id;     // "kind:name", stable across runs
  std::string label;
  std::vector<MapNode> children;
};

std::string actions_label(const Step& step) {
  std::string out = "{";
  bool first = true;
  auto add = [&](std::string text) {
    if (!first) out += ", ";
    out += std::move(text);
    first = false;
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
  return out + "}";
}

std::string leaf_goal_label(const Model& model, const Goal& goal) {
  std::string label = goal.name;
  if (auto agent = inherited_responsible(model, goal.name))
    label += " [" + *agent + "]";
  if (goal.entry) label += " \xE2\x86\x92 " + *goal.entry;  // "→"
  return label;
}

// Which leaf goals survive the filter (all of them under full/concepts).
bool goal_selected(const Model& model, const Goal& goal, const MapFilter& filter) {
  if (filter.mode != MapFilter::Mode::GoalsOfAgent) return true;
  if (goal.is_leaf())
    return inherited_responsible(model, goal.name) == filter.agent;
  return std::any_of(goal.children.begin(), goal.children.end(),
                     [&](const Goal& c) { return goal_selected(model, c, filter); });
}

MapNode goal_node(const Model& model, const Goal& goal, const MapFilter& filter) {
  MapNode node{"goal:" + goal.name,
               goal.is_leaf() ? leaf_goal_label(model, goal) : goal.name,
               {}};
  for (const Goal& child : goal.children)
    if (goal_selected(model, child, filter))
      node.children.push_back(goal_node(model, child, filter));
  return node;
}

MapNode privilege_node(const Model& model, const Goal& goal) {
  MapNode node{"priv:" + goal.name, "privilege for " + goal.name, {}};
  int ordinal = 0;
  for (const Privilege* priv : privileges_of(model, goal.name)) {
    const std::string base = "step:" + goal.name + "/" + std::to_string(ordinal++);
    node.children.push_back({base + "/entry",
                             "entry " + priv->entry_step.entity + " " +
                                 actions_label(priv->entry_step),
                             {}});
    int index = 0;
    for (const Step& step : priv->steps)
      node.children.push_back({base + "/" + std::to_string(index++),
                               "step " + step.via.value_or("?") + " \xE2\x86\x92 " +
                                   step.entity + " " + actions_label(step),
                               {}});
  }
  return node;
}

MapNode concepts_branch(const Model& model, bool relationship_nodes) {
  MapNode branch{"branch:Concepts", "Concepts", {}};
  for (const Entity& entity : model.entities) {
    MapNode node{"entity:" + entity.name, entity.name, {}};
    for (const Attribute& attr : entity.attributes)
      node.children.push_back({"attr:" + entity.name + "." + attr.name,
                               attr.name + ": " + std::string(to_string(attr.kind)),
                               {}});
    branch.children.push_back(std::move(node));
  }
  if (relationship_nodes)
    for (const Relationship& rel : model.relationships)
      branch.children.push_back({"rel:" + rel.name,
                                 rel.name + ": " + rel.source + " \xE2\x86\x92 " +
                                     rel.target,
                                 {}});
  return branch;
}

MapNode build_tree(const Model& model, const MapFilter& filter,
                   bool relationship_nodes) {
  MapNode root{"model:" + model.source_name, model.source_name, {}};

  if (filter.mode == MapFilter::Mode::Full) {
    MapNode orgs{"branch:Organization", "Organization", {}};
    for (const Organization& org : model.organizations) {
      MapNode node{"org:" + org.name, org.name, {}};
      for (const Agent& agent : org.agents)
        node.children.push_back({"agent:" + agent.name, agent.name, {}});
      orgs.children.push_back(std::move(node));
    }
    root.children.push_back(std::move(orgs));
  }

  if (filter.mode != MapFilter::Mode::ConceptsOnly) {
    MapNode goals{"branch:Goals", "Goals", {}};
    for (const Goal& goal : model.goals)
      if (goal_selected(model, goal, filter))
        goals.children.push_back(goal_node(model, goal, filter));
    root.children.push_back(std::move(goals));
  }

  if (filter.mode != MapFilter::Mode::GoalsOfAgent)
    root.children.push_back(concepts_branch(model, relationship_nodes));

  if (filter.mode != MapFilter::Mode::ConceptsOnly) {
    MapNode privs{"branch:Privileges", "Privileges", {}};
    for (const Goal* goal : leaf_goals(model)) {
      if (!goal_selected(model, *goal, filter)) continue;
      if (privileges_of(model, goal->name).empty()) continue;
      privs.children.push_back(privilege_node(model, *goal));
    }
    root.children.push_back(std::move(privs));
  }

  return root;
}

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void render_dot_node(const MapNode& node, std::string& out) {
  out += "  \"" + dot_escape(node.id) + "\" [label=\"" + dot_escape(node.label) +
         "\"];\n";
  for (const MapNode& child : node.children) render_dot_node(child, out);
}

void render_dot_edges(const MapNode& node, std::string& out) {
  for (const MapNode& child : node.children) {
    out += "  \"" + dot_escape(node.id) + "\" -> \"" + dot_escape(child.id) +
           "\";\n";
    render_dot_edges(child, out);
  }
}

std::string render_dot(const Model& model, const MapNode& root,
                       bool with_relationship_edges) {
  std::string out = "digraph mindmap {\n  rankdir=LR;\n  node [shape=box];\n";
  render_dot_node(root, out);
  render_dot_edges(root, out);
  if (with_relationship_edges)
    for (const Relationship& rel : model.relationships)
      out += "  \"entity:" + dot_escape(rel.source) + "\" -> \"entity:" +
             dot_escape(rel.target) + "\" [label=\"" + dot_escape(rel.name) +
             "\", dir=none];\n";
  out += "}\n";
  return out;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void render_freemind_node(const MapNode& node, int depth, std::string& out) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  out += pad + "<node TEXT=\"" + xml_escape(node.label) + "\"";
  if (node.children.empty()) {
    out += "/>\n";
    return;
  }
  out += ">\n";
  for (const MapNode& child : node.children)
    render_freemind_node(child, depth + 1, out);
  out += pad + "</node>\n";
}

std::string render_freemind(const MapNode& root) {
  std::string out = "<map version=\"1.0.1\">\n";
  render_freemind_node(root, 1, out);
  out += "</map>\n";
  return out;
}

}  // namespace

std::variant<std::string, MindmapError> emit_mindmap(const Model& model,
                                                     const MapFilter& filter,
                                                     MapFormat format) {
  if (filter.mode == MapFilter::Mode::GoalsOfAgent &&
      !find_agent(model, filter.agent))
    return MindmapError{"unknown agent '" + filter.agent + "'"};

  const bool freemind = format == MapFormat::Freemind;
  const MapNode root = build_tree(model, filter, /*relationship_nodes=*/freemind);
  if (freemind) return render_freemind(root);
  const bool relationship_edges = filter.mode != MapFilter::Mode::GoalsOfAgent;
  return render_dot(model, root, relationship_edges);
}

}  // namespace greq
