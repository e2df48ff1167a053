#include "greq/appmodel.hpp"

#include <json.hpp>

#include "greq/diagnostics.hpp"

namespace greq {

std::string_view to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::Index: return "index";
    case UnitKind::Details: return "details";
    case UnitKind::EntryForm: return "entry_form";
    case UnitKind::ModifyForm: return "modify_form";
  }
  return "index";
}

namespace {

// Units derivable from one step, in fixed kind order.
std::vector<Unit> units_for_step(const Step& step, const std::string& id_prefix) {
  std::vector<Unit> units;
  if (step.actions.create)
    units.push_back({id_prefix + "_entry_form", UnitKind::EntryForm, step.entity, {}});
  if (step.actions.update)
    units.push_back({id_prefix + "_modify_form", UnitKind::ModifyForm, step.entity,
                     step.updated_attributes});
  if (step.actions.read) {
    units.push_back({id_prefix + "_index", UnitKind::Index, step.entity, {}});
    units.push_back({id_prefix + "_details", UnitKind::Details, step.entity, {}});
  }
  return units;
}

Page derive_page(const Model& model, const Goal& goal) {
  Page page;
  page.name = goal.name;
  int priv_ordinal = 0;
  for (const Privilege* priv : privileges_of(model, goal.name)) {
    const std::string prefix = "p" + std::to_string(priv_ordinal++);
    std::vector<Unit> previous =
        units_for_step(priv->entry_step, prefix + "_s0_" + priv->entry_step.entity);
    page.units.insert(page.units.end(), previous.begin(), previous.end());
    int step_ordinal = 1;
    for (const Step& step : priv->steps) {
      std::vector<Unit> current = units_for_step(
          step, prefix + "_s" + std::to_string(step_ordinal++) + "_" + step.entity);
      for (const Unit& from : previous)
        for (const Unit& to : current)
          page.links.push_back({from.id, to.id, step.via.value_or("navigation")});
      page.units.insert(page.units.end(), current.begin(), current.end());
      previous = std::move(current);
    }
  }
  return page;
}

}  // namespace

std::variant<AppModel, AppModelRefusal> emit_app_model(const Model& model) {
  const DiagnosticReport report = run_diagnostics(model);
  if (report.has_errors()) return AppModelRefusal{report.error_rule_ids()};

  AppModel app;
  app.entities = model.entities;
  app.relationships = model.relationships;

  const std::vector<const Goal*> leaves = leaf_goals(model);
  for (const Organization& org : model.organizations) {
    for (const Agent& agent : org.agents) {
      SiteView view;
      view.agent = agent.name;
      for (const Goal* goal : leaves) {
        if (inherited_responsible(model, goal->name) != agent.name) continue;
        if (privileges_of(model, goal->name).empty()) continue;
        view.pages.push_back(derive_page(model, *goal));
      }
      if (!view.pages.empty()) app.site_views.push_back(std::move(view));
    }
  }
  return app;
}

std::string serialize_app_model(const AppModel& app) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json doc;

  ordered_json entities = ordered_json::array();
  for (const Entity& entity : app.entities) {
    ordered_json attrs = ordered_json::array();
    for (const Attribute& attr : entity.attributes)
      attrs.push_back({{"name", attr.name}, {"kind", to_string(attr.kind)}});
    entities.push_back({{"name", entity.name}, {"attributes", std::move(attrs)}});
  }
  ordered_json relationships = ordered_json::array();
  for (const Relationship& rel : app.relationships)
    relationships.push_back(
        {{"name", rel.name}, {"source", rel.source}, {"target", rel.target}});
  doc["data_model"] = {{"entities", std::move(entities)},
                       {"relationships", std::move(relationships)}};

  ordered_json views = ordered_json::array();
  for (const SiteView& view : app.site_views) {
    ordered_json pages = ordered_json::array();
    for (const Page& page : view.pages) {
      ordered_json units = ordered_json::array();
      for (const Unit& unit : page.units) {
        ordered_json u;
        u["id"] = unit.id;
        u["kind"] = to_string(unit.kind);
        u["entity"] = unit.entity;
        u["attributes"] = unit.attributes;
        units.push_back(std::move(u));
      }
      ordered_json links = ordered_json::array();
      for (const Link& link : page.links)
        links.push_back(
            {{"source", link.source}, {"target", link.target}, {"via", link.via}});
      pages.push_back({{"name", page.name},
                       {"units", std::move(units)},
                       {"links", std::move(links)}});
    }
    views.push_back({{"agent", view.agent}, {"pages", std::move(pages)}});
  }
  doc["site_views"] = std::move(views);

  return doc.dump(2) + "\n";
}

}  // namespace greq
