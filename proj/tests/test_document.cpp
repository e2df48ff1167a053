#include <doctest.h>

#include <random>

#include "greq/diagnostics.hpp"
#include "greq/document.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace greq;
using greq::testing::conference_model;
using greq::testing::load_fixture;

namespace {

std::string fixture_document() {
  const Model model = conference_model();
  return emit_document(model, run_diagnostics(model));
}

}  // namespace

TEST_CASE("goals section nests sub-goals under their parent") {
  const std::string doc = fixture_document();
  const size_t parent = doc.find("- **Gérer les soumissions**");
  const size_t child = doc.find("  - **Déposer une soumission**");
  REQUIRE(parent != std::string::npos);
  REQUIRE(child != std::string::npos);
  CHECK(parent < child);
}

TEST_CASE("section order is fixed and complete") {
  const std::string doc = fixture_document();
  const char* headers[] = {"## 1. Enterprise", "## 2. Goals",
                           "## 3. Information structure", "## 4. Privileges",
                           "## 5. Diagnostics"};
  size_t last = 0;
  for (const char* header : headers) {
    const size_t pos = doc.find(header);
    REQUIRE(pos != std::string::npos);
    CHECK(pos >= last);
    last = pos;
  }
  CHECK(doc.find("No findings.") != std::string::npos);
}

TEST_CASE("empty model still renders all five headers") {
  Model empty;
  empty.source_name = "empty";
  const std::string doc = emit_document(empty, run_diagnostics(empty));
  for (const char* header : {"## 1.", "## 2.", "## 3.", "## 4.", "## 5."})
    CHECK(doc.find(header) != std::string::npos);
}

TEST_CASE("diagnostics section embeds the validate rendering verbatim") {
  const Model mutant = load_fixture("mutants/r001.greq");
  const DiagnosticReport report = run_diagnostics(mutant);
  const std::string doc = emit_document(mutant, report);
  CHECK(doc.find(render_report_text(report)) != std::string::npos);
  CHECK(doc.find("No findings.") == std::string::npos);
}

TEST_CASE("attribute tables use pipe rows") {
  const std::string doc = fixture_document();
  CHECK(doc.find("| titre | text |") != std::string::npos);
  CHECK(doc.find("| (entry) | Rapport | create, update(commentaire) |") !=
        std::string::npos);
  CHECK(doc.find("| commente | Article | read |") != std::string::npos);
}

TEST_CASE("every named element appears in the document") {
  std::mt19937 rng(2025);
  for (int i = 0; i < 50; ++i) {
    const Model model = greq::testing::random_model(rng);
    const std::string doc = emit_document(model, run_diagnostics(model));
    for (const Organization& org : model.organizations) {
      CHECK(doc.find(org.name) != std::string::npos);
      for (const Agent& agent : org.agents)
        CHECK(doc.find(agent.name) != std::string::npos);
    }
    for (const Goal* goal : all_goals(model))
      CHECK(doc.find(goal->name) != std::string::npos);
    for (const Entity& entity : model.entities) {
      CHECK(doc.find(entity.name) != std::string::npos);
      for (const Attribute& attr : entity.attributes)
        CHECK(doc.find(attr.name) != std::string::npos);
    }
    for (const Relationship& rel : model.relationships)
      CHECK(doc.find(rel.name) != std::string::npos);
    for (const Privilege& priv : model.privileges)
      CHECK(doc.find(priv.goal) != std::string::npos);
  }
}

TEST_CASE("document bytes are deterministic") {
  CHECK(fixture_document() == fixture_document());
}
