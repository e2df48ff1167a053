#include <doctest.h>

#include <random>

#include <json.hpp>

#include "greq/appmodel.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace greq;
using nlohmann::json;
using greq::testing::conference_model;
using greq::testing::load_fixture;

namespace {

AppModel fixture_app() {
  auto result = emit_app_model(conference_model());
  REQUIRE(std::holds_alternative<AppModel>(result));
  return std::get<AppModel>(result);
}

int derivable_units(const Step& step) {
  int n = 0;
  if (step.actions.create) n += 1;
  if (step.actions.update) n += 1;
  if (step.actions.read) n += 2;
  return n;  // delete derives nothing
}

// Structural validator for the subset of JSON Schema used by
// schemas/appmodel.schema.json.
bool matches_schema(const json& value, const json& schema) {
  if (schema.contains("enum")) {
    for (const json& allowed : schema["enum"])
      if (value == allowed) return true;
    return false;
  }
  const std::string type = schema.value("type", "");
  if (type == "string") return value.is_string();
  if (type == "array") {
    if (!value.is_array()) return false;
    for (const json& item : value)
      if (!matches_schema(item, schema["items"])) return false;
    return true;
  }
  if (type == "object") {
    if (!value.is_object()) return false;
    for (const json& key : schema.value("required", json::array()))
      if (!value.contains(key.get<std::string>())) return false;
    const json props = schema.value("properties", json::object());
    for (const auto& [key, sub] : value.items()) {
      if (!props.contains(key)) return false;  // additionalProperties: false
      if (!matches_schema(sub, props[key])) return false;
    }
    return true;
  }
  return false;
}

}  // namespace

TEST_CASE("author site view has the submission page") {
  const AppModel app = fixture_app();
  REQUIRE(app.site_views.size() == 2);
  const SiteView& author = app.site_views[0];
  CHECK(author.agent == "Auteur");
  REQUIRE(author.pages.size() == 1);
  const Page& page = author.pages[0];
  CHECK(page.name == "Déposer une soumission");
  REQUIRE(page.units.size() == 2);
  CHECK(page.units[0].kind == UnitKind::EntryForm);
  CHECK(page.units[0].entity == "Article");
  CHECK(page.units[1].kind == UnitKind::ModifyForm);
  CHECK(page.units[1].attributes == std::vector<std::string>{"titre", "auteurs"});
  CHECK(page.links.empty());
}

TEST_CASE("reviewer page links Rapport units to Article units via commente") {
  const AppModel app = fixture_app();
  const SiteView& reviewer = app.site_views[1];
  CHECK(reviewer.agent == "Relecteur");
  const Page& page = reviewer.pages[0];
  // Rapport: entry_form + modify_form; Article: index + details.
  REQUIRE(page.units.size() == 4);
  bool details_link = false;
  for (const Link& link : page.links) {
    CHECK(link.via == "commente");
    if (link.target.find("details") != std::string::npos) details_link = true;
  }
  CHECK(page.links.size() == 4);  // 2 source units x 2 target units
  CHECK(details_link);
}

TEST_CASE("refusal names the blocking rules") {
  auto result = emit_app_model(load_fixture("mutants/r001.greq"));
  REQUIRE(std::holds_alternative<AppModelRefusal>(result));
  CHECK(std::get<AppModelRefusal>(result).blocking_rules ==
        std::vector<std::string>{"R001"});
}

TEST_CASE("data model mirrors the concept graph") {
  const AppModel app = fixture_app();
  const Model model = conference_model();
  CHECK(app.entities == model.entities);
  CHECK(app.relationships == model.relationships);
}

TEST_CASE("unit count per page matches the closed form") {
  std::mt19937 rng(808);
  int pages_checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Model model = greq::testing::random_model(rng);
    auto result = emit_app_model(model);
    if (!std::holds_alternative<AppModel>(result)) continue;
    const AppModel& app = std::get<AppModel>(result);
    for (const SiteView& view : app.site_views)
      for (const Page& page : view.pages) {
        int expected = 0;
        for (const Privilege* priv : privileges_of(model, page.name)) {
          expected += derivable_units(priv->entry_step);
          for (const Step& step : priv->steps) expected += derivable_units(step);
        }
        CHECK(static_cast<int>(page.units.size()) == expected);
        ++pages_checked;
      }
  }
  CHECK(pages_checked > 20);
}

TEST_CASE("no site view for an agent without goals") {
  Model model = conference_model();
  model.organizations[0].agents.push_back({"Observateur"});
  // Give the new agent a goal so diagnostics pass, then check the others.
  model.goals.push_back({"Observer", "Observateur", std::string("Article"), false, {}});
  model.privileges.push_back(
      {"Observer", {"Article", std::nullopt, {.read = true}, {}}, {}});
  auto result = emit_app_model(model);
  REQUIRE(std::holds_alternative<AppModel>(result));
  for (const SiteView& view : std::get<AppModel>(result).site_views)
    CHECK(!view.pages.empty());
}

TEST_CASE("serialization is deterministic and schema-valid") {
  const AppModel app = fixture_app();
  const std::string text = serialize_app_model(app);
  CHECK(text == serialize_app_model(app));

  const json doc = json::parse(text);
  const json schema = json::parse(greq::testing::read_file(
      std::string(GREQ_FIXTURE_DIR) + "/../../schemas/appmodel.schema.json"));
  CHECK(matches_schema(doc, schema));
  CHECK(doc["site_views"][0]["agent"] == "Auteur");
}
