#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "greq/diagnostics.hpp"
#include "greq/model.hpp"
#include "greq/parser.hpp"

#ifndef GREQ_FIXTURE_DIR
#define GREQ_FIXTURE_DIR "tests/fixtures"
#endif

namespace greq::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(GREQ_FIXTURE_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(GREQ_FIXTURE_DIR) + "/../golden/" + name;
}

// Parses a fixture with a path-independent file name so emitted artifacts
// are stable regardless of where the tests run.
inline Model load_fixture(const std::string& name) {
  ParseResult result = parse_source(read_file(fixture_path(name)), name);
  if (!result.ok())
    throw std::runtime_error("fixture " + name + " failed to parse");
  return std::move(result.model);
}

inline Model conference_model() { return load_fixture("conference.greq"); }

// Independent walk-validity oracle: scan the relationship list for each
// consecutive entity pair, no graph structure involved.
inline bool walk_valid_oracle(const Model& model, const Privilege& priv) {
  std::string at = priv.entry_step.entity;
  for (const Step& step : priv.steps) {
    if (!step.via) return false;
    bool joined = false;
    for (const Relationship& rel : model.relationships)
      if (rel.name == *step.via &&
          ((rel.source == at && rel.target == step.entity) ||
           (rel.source == step.entity && rel.target == at)))
        joined = true;
    if (!joined) return false;
    at = step.entity;
  }
  return true;
}

inline double coverage_oracle(const Model& model) {
  if (model.entities.empty()) return 1.0;
  std::set<std::string> touched;
  for (const Privilege& priv : model.privileges) {
    touched.insert(priv.entry_step.entity);
    for (const Step& step : priv.steps) touched.insert(step.entity);
  }
  int covered = 0;
  for (const Entity& entity : model.entities)
    if (touched.count(entity.name)) ++covered;
  return static_cast<double>(covered) / static_cast<double>(model.entities.size());
}

inline int count_rule(const DiagnosticReport& report, const std::string& rule) {
  int n = 0;
  for (const Diagnostic& d : report.diagnostics)
    if (d.rule_id == rule) ++n;
  return n;
}

inline std::set<std::string> error_rules(const DiagnosticReport& report) {
  std::set<std::string> out;
  for (const Diagnostic& d : report.diagnostics)
    if (d.severity == Severity::Error) out.insert(d.rule_id);
  return out;
}

}  // namespace greq::testing
