#pragma once

#include <string>
#include <vector>

#include "greq/diagnostics.hpp"
#include "greq/model.hpp"

namespace greq {

struct AgentMetrics {
  std::string agent;
  int goal_count = 0;  // leaf goals owned (directly or by inheritance)
  std::vector<std::string> at_risk_goals;  // leaf goals with R002/R004 findings
  double risk_ratio = 0.0;  // at_risk / owned leaf goals; 0 when none owned

  bool operator==(const AgentMetrics&) const = default;
};

struct MetricsReport {
  int organizations = 0;
  int agents = 0;
  int goals = 0;
  int leaf_goals = 0;
  int entities = 0;
  int attributes = 0;
  int relationships = 0;
  int privileges = 0;
  int goal_tree_depth = 0;
  // Share of entities touched by at least one privilege step; 1.0 when the
  // model has no entities.
  double entity_coverage = 1.0;
  std::vector<AgentMetrics> per_agent;  // declaration order

  bool operator==(const MetricsReport&) const = default;
};

// At-risk goals are read off the diagnostic report (R002/R004), not
// recomputed, so metrics and diagnostics cannot disagree.
MetricsReport compute_metrics(const Model& model, const DiagnosticReport& report);

std::string render_metrics_text(const MetricsReport& metrics);
std::string render_metrics_json(const MetricsReport& metrics);

}  // namespace greq
