#include "greq/metrics.hpp"

#include <cstdio>
#include <set>

#include <json.hpp>

namespace greq {

MetricsReport compute_metrics(const Model& model, const DiagnosticReport& report) {
  MetricsReport out;
  out.organizations = static_cast<int>(model.organizations.size());
  for (const Organization& org : model.organizations)
    out.agents += static_cast<int>(org.agents.size());
  const std::vector<const Goal*> goals = all_goals(model);
  const std::vector<const Goal*> leaves = leaf_goals(model);
  out.goals = static_cast<int>(goals.size());
  out.leaf_goals = static_cast<int>(leaves.size());
  out.entities = static_cast<int>(model.entities.size());
  for (const Entity& entity : model.entities)
    out.attributes += static_cast<int>(entity.attributes.size());
  out.relationships = static_cast<int>(model.relationships.size());
  out.privileges = static_cast<int>(model.privileges.size());
  out.goal_tree_depth = goal_tree_depth(model);

  std::set<std::string> touched;
  for (const Privilege& priv : model.privileges) {
    touched.insert(priv.entry_step.entity);
    for (const Step& step : priv.steps) touched.insert(step.entity);
  }
  if (!model.entities.empty()) {
    int covered = 0;
    for (const Entity& entity : model.entities)
      if (touched.count(entity.name)) ++covered;
    out.entity_coverage = static_cast<double>(covered) /
                          static_cast<double>(model.entities.size());
  }

  std::set<std::string> at_risk;
  for (const Diagnostic& d : report.diagnostics)
    if (d.rule_id == "R002" || d.rule_id == "R004") at_risk.insert(d.subject_name);

  for (const Organization& org : model.organizations) {
    for (const Agent& agent : org.agents) {
      AgentMetrics am;
      am.agent = agent.name;
      for (const Goal* leaf : leaves) {
        if (inherited_responsible(model, leaf->name) != agent.name) continue;
        ++am.goal_count;
        if (at_risk.count(leaf->name)) am.at_risk_goals.push_back(leaf->name);
      }
      if (am.goal_count > 0)
        am.risk_ratio = static_cast<double>(am.at_risk_goals.size()) /
                        static_cast<double>(am.goal_count);
      out.per_agent.push_back(std::move(am));
    }
  }
  return out;
}

std::string render_metrics_text(const MetricsReport& m) {
  auto ratio = [](double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return std::string(buf);
  };
  std::string out;
  out += "organizations   " + std::to_string(m.organizations) + "\n";
  out += "agents          " + std::to_string(m.agents) + "\n";
  out += "goals           " + std::to_string(m.goals) + "\n";
  out += "leaf_goals      " + std::to_string(m.leaf_goals) + "\n";
  out += "entities        " + std::to_string(m.entities) + "\n";
  out += "attributes      " + std::to_string(m.attributes) + "\n";
  out += "relationships   " + std::to_string(m.relationships) + "\n";
  out += "privileges      " + std::to_string(m.privileges) + "\n";
  out += "goal_tree_depth " + std::to_string(m.goal_tree_depth) + "\n";
  out += "entity_coverage " + ratio(m.entity_coverage) + "\n";
  for (const AgentMetrics& am : m.per_agent) {
    out += "agent '" + am.agent + "': goals " + std::to_string(am.goal_count) +
           ", at risk " + std::to_string(am.at_risk_goals.size()) +
           ", risk_ratio " + ratio(am.risk_ratio);
    if (!am.at_risk_goals.empty()) {
      out += " (";
      for (size_t i = 0; i < am.at_risk_goals.size(); ++i) {
        if (i > 0) out += ", ";
        out += "'" + am.at_risk_goals[i] + "'";
      }
      out += ")";
    }
    out += "\n";
  }
  return out;
}

std::string render_metrics_json(const MetricsReport& m) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json doc;
  doc["organizations"] = m.organizations;
  doc["agents"] = m.agents;
  doc["goals"] = m.goals;
  doc["leaf_goals"] = m.leaf_goals;
  doc["entities"] = m.entities;
  doc["attributes"] = m.attributes;
  doc["relationships"] = m.relationships;
  doc["privileges"] = m.privileges;
  doc["goal_tree_depth"] = m.goal_tree_depth;
  doc["entity_coverage"] = m.entity_coverage;
  ordered_json agents = ordered_json::array();
  for (const AgentMetrics& am : m.per_agent) {
    ordered_json a;
    a["agent"] = am.agent;
    a["goal_count"] = am.goal_count;
    a["at_risk_goals"] = am.at_risk_goals;
    a["risk_ratio"] = am.risk_ratio;
    agents.push_back(std::move(a));
  }
  doc["per_agent"] = std::move(agents);
  return doc.dump(2) + "\n";
}

}  // namespace greq
