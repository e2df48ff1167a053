#pragma once

#include <string>
#include <variant>
#include <vector>

#include "greq/model.hpp"

namespace greq {

// WebML-inspired application model: data structure plus per-agent site
// views with pages, content units and navigation links. Presentation is
// out of scope; delete actions derive no unit.

enum class UnitKind { Index, Details, EntryForm, ModifyForm };

std::string_view to_string(UnitKind kind);

struct Unit {
  std::string id;  // unique within its page
  UnitKind kind = UnitKind::Index;
  std::string entity;
  std::vector<std::string> attributes;  // modify_form only

  bool operator==(const Unit&) const = default;
};

struct Link {
  std::string source;  // unit id
  std::string target;  // unit id
  std::string via;     // relationship name, or "navigation"

  bool operator==(const Link&) const = default;
};

struct Page {
  std::string name;  // the leaf goal's name
  std::vector<Unit> units;
  std::vector<Link> links;

  bool operator==(const Page&) const = default;
};

struct SiteView {
  std::string agent;
  std::vector<Page> pages;

  bool operator==(const SiteView&) const = default;
};

struct AppModel {
  std::vector<Entity> entities;
  std::vector<Relationship> relationships;
  std::vector<SiteView> site_views;

  bool operator==(const AppModel&) const = default;
};

struct AppModelRefusal {
  // Error-severity rule ids that block the transformation.
  std::vector<std::string> blocking_rules;

  bool operator==(const AppModelRefusal&) const = default;
};

// Derives the application model. Refuses when the model carries any
// error-severity diagnostic.
std::variant<AppModel, AppModelRefusal> emit_app_model(const Model& model);

// Deterministic `.appmodel.json` rendering (schema in schemas/).
std::string serialize_app_model(const AppModel& app);

}  // namespace greq
