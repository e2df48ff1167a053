#include <doctest.h>

#include <regex>
#include <set>
#include <string>
#include <vector>

#include "greq/mindmap.hpp"
#include "support/helpers.hpp"

using namespace greq;
using greq::testing::conference_model;
using greq::testing::read_file;

namespace {

std::string emit(const Model& model, const MapFilter& filter, MapFormat format) {
  auto result = emit_mindmap(model, filter, format);
  REQUIRE(std::holds_alternative<std::string>(result));
  return std::get<std::string>(result);
}

// Minimal dot grammar check: header, node statements, edge statements,
// closing brace. Anything else fails.
bool dot_well_formed(const std::string& text) {
  static const std::regex node_re(
      R"(^  "(?:[^"\\]|\\.)+" \[label="(?:[^"\\]|\\.)*"(, dir=none)?\];$)");
  static const std::regex edge_re(
      R"(^  "(?:[^"\\]|\\.)+" -> "(?:[^"\\]|\\.)+"( \[label="(?:[^"\\]|\\.)*", dir=none\])?;$)");
  std::vector<std::string> lines;
  std::string line;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (lines.size() < 4) return false;
  if (lines.front() != "digraph mindmap {") return false;
  if (lines.back() != "}") return false;
  for (size_t i = 1; i + 1 < lines.size(); ++i) {
    if (lines[i] == "  rankdir=LR;" || lines[i] == "  node [shape=box];") continue;
    if (!std::regex_match(lines[i], node_re) &&
        !std::regex_match(lines[i], edge_re))
      return false;
  }
  return true;
}

// Tag-balance check for the freemind XML.
bool xml_well_formed(const std::string& text) {
  int depth = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '<') continue;
    const size_t end = text.find('>', i);
    if (end == std::string::npos) return false;
    const std::string tag = text.substr(i, end - i + 1);
    if (tag.rfind("</", 0) == 0) {
      if (--depth < 0) return false;
    } else if (tag[tag.size() - 2] != '/') {
      ++depth;
    }
    i = end;
  }
  return depth == 0;
}

std::set<std::string> node_ids(const std::string& dot) {
  static const std::regex id_re(R"re(^  "((?:[^"\\]|\\.)+)" \[label=)re");
  std::set<std::string> ids;
  std::istringstream in(dot);
  std::string line;
  std::smatch m;
  while (std::getline(in, line))
    if (std::regex_search(line, m, id_re)) ids.insert(m[1]);
  return ids;
}

}  // namespace

TEST_CASE("full dot output matches the golden file") {
  const std::string out =
      emit(conference_model(), MapFilter::full(), MapFormat::Dot);
  CHECK(out == read_file(greq::testing::golden_path("conference_full.dot")));
  CHECK(out.find("\"Gérer les soumissions") != std::string::npos);
  CHECK(out.find("[label=\"commente\", dir=none]") != std::string::npos);
  CHECK(dot_well_formed(out));
}

TEST_CASE("concepts-only dot keeps exactly the vocabulary") {
  const std::string out =
      emit(conference_model(), MapFilter::concepts_only(), MapFormat::Dot);
  CHECK(out ==
        read_file(greq::testing::golden_path("conference_concepts.dot")));
  const std::set<std::string> ids = node_ids(out);
  int entities = 0, attributes = 0, goals = 0;
  for (const std::string& id : ids) {
    if (id.rfind("entity:", 0) == 0) ++entities;
    if (id.rfind("attr:", 0) == 0) ++attributes;
    if (id.rfind("goal:", 0) == 0) ++goals;
  }
  CHECK(entities == 2);
  CHECK(attributes == 3);
  CHECK(goals == 0);
  CHECK(dot_well_formed(out));
}

TEST_CASE("agent-focused freemind keeps one leaf goal") {
  const std::string out = emit(conference_model(),
                               MapFilter::goals_of_agent("Auteur"),
                               MapFormat::Freemind);
  CHECK(out ==
        read_file(greq::testing::golden_path("conference_auteur.mm")));
  CHECK(out.find("Déposer une soumission [Auteur]") != std::string::npos);
  CHECK(out.find("Analyser une soumission") == std::string::npos);
  CHECK(xml_well_formed(out));
  CHECK(out.rfind("<map version=\"1.0.1\">", 0) == 0);
}

TEST_CASE("full freemind output matches the golden file") {
  const std::string out =
      emit(conference_model(), MapFilter::full(), MapFormat::Freemind);
  CHECK(out ==
        read_file(greq::testing::golden_path("conference_full.mm")));
  CHECK(xml_well_formed(out));
}

TEST_CASE("unknown agent in the filter is an error") {
  auto result = emit_mindmap(conference_model(),
                             MapFilter::goals_of_agent("Inconnu"), MapFormat::Dot);
  REQUIRE(std::holds_alternative<MindmapError>(result));
  CHECK(std::get<MindmapError>(result).message.find("Inconnu") !=
        std::string::npos);
}

TEST_CASE("every filtered node also appears under full") {
  const Model model = conference_model();
  const std::set<std::string> full =
      node_ids(emit(model, MapFilter::full(), MapFormat::Dot));
  for (const MapFilter& filter :
       {MapFilter::concepts_only(), MapFilter::goals_of_agent("Auteur"),
        MapFilter::goals_of_agent("Relecteur")}) {
    for (const std::string& id : node_ids(emit(model, filter, MapFormat::Dot)))
      CHECK(full.count(id) == 1);
  }
}

TEST_CASE("emission is deterministic") {
  const Model model = conference_model();
  for (MapFormat format : {MapFormat::Dot, MapFormat::Freemind})
    CHECK(emit(model, MapFilter::full(), format) ==
          emit(model, MapFilter::full(), format));
}

TEST_CASE("names needing escapes stay well-formed") {
  Model model;
  model.source_name = "quote\"and\\slash";
  model.entities.push_back({"Weird \"Entity\"", {{"a<b>&c", AttributeKind::Text}}});
  CHECK(dot_well_formed(emit(model, MapFilter::full(), MapFormat::Dot)));
  const std::string mm = emit(model, MapFilter::full(), MapFormat::Freemind);
  CHECK(xml_well_formed(mm));
  CHECK(mm.find("&quot;") != std::string::npos);
  CHECK(mm.find("&lt;b&gt;&amp;c") != std::string::npos);
}
