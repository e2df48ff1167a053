// greq — command-line front end: parse, diagnose, transform.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "greq/appmodel.hpp"
#include "greq/diagnostics.hpp"
#include "greq/document.hpp"
#include "greq/interchange.hpp"
#include "greq/metrics.hpp"
#include "greq/mindmap.hpp"
#include "greq/parser.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDiagnosticErrors = 1;
constexpr int kUsageOrParseFailure = 2;

bool g_quiet = false;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return out.good();
}

// Parses the model or reports why it cannot; nullopt means exit 2.
std::optional<greq::Model> load_model(const std::string& path) {
  const auto source = read_file(path);
  if (!source) {
    std::cerr << "greq: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  greq::ParseResult parsed = greq::parse_source(*source, path);
  if (!parsed.ok()) {
    if (!g_quiet) std::cerr << greq::format_errors(parsed.errors, *source);
    return std::nullopt;
  }
  return std::move(parsed.model);
}

int run_check(const std::string& path, bool strict) {
  auto model = load_model(path);
  if (!model) return kUsageOrParseFailure;
  const greq::DiagnosticReport report = greq::run_diagnostics(*model);
  if (!g_quiet) std::cerr << greq::render_report_text(report);
  if (report.has_errors()) return kDiagnosticErrors;
  if (strict && !report.diagnostics.empty()) return kDiagnosticErrors;
  return kOk;
}

int emit_to(const std::string& out_path, const std::string& content) {
  if (!write_output(out_path, content)) {
    std::cerr << "greq: cannot write '" << out_path << "'\n";
    return kUsageOrParseFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goal-oriented requirements toolkit"};
  app.require_subcommand(1);
  app.add_flag("--quiet", g_quiet, "Suppress diagnostic output");

  std::string file, out_path, format = "dot", focus, agent;
  bool strict = false, json = false;

  CLI::App* check = app.add_subcommand("check", "Parse and run diagnostics");
  check->add_option("FILE", file)->required();
  check->add_flag("--strict", strict, "Fail on warnings too");

  CLI::App* doc = app.add_subcommand("doc", "Generate the requirements document");
  doc->add_option("FILE", file)->required();
  doc->add_option("-o,--output", out_path);

  CLI::App* mindmap = app.add_subcommand("mindmap", "Export a concept map");
  mindmap->add_option("FILE", file)->required();
  mindmap->add_option("--format", format)
      ->check(CLI::IsMember({"dot", "freemind"}));
  mindmap->add_option("--focus", focus)->check(CLI::IsMember({"concepts"}));
  mindmap->add_option("--agent", agent, "Keep only this agent's goals");
  mindmap->add_option("-o,--output", out_path);

  CLI::App* appmodel =
      app.add_subcommand("appmodel", "Export the WebML-style application model");
  appmodel->add_option("FILE", file)->required();
  appmodel->add_option("-o,--output", out_path);

  CLI::App* metrics = app.add_subcommand("metrics", "Model measures and risk");
  metrics->add_option("FILE", file)->required();
  metrics->add_flag("--json", json);

  CLI::App* export_cmd =
      app.add_subcommand("export", "Write the canonical interchange form");
  export_cmd->add_option("FILE", file)->required();
  export_cmd->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageOrParseFailure;
  }

  if (check->parsed()) return run_check(file, strict);

  auto model = load_model(file);
  if (!model) return kUsageOrParseFailure;

  if (doc->parsed()) {
    const greq::DiagnosticReport report = greq::run_diagnostics(*model);
    return emit_to(out_path, greq::emit_document(*model, report));
  }

  if (mindmap->parsed()) {
    if (!focus.empty() && !agent.empty()) {
      std::cerr << "greq: --focus and --agent are mutually exclusive\n";
      return kUsageOrParseFailure;
    }
    greq::MapFilter filter = greq::MapFilter::full();
    if (!focus.empty()) filter = greq::MapFilter::concepts_only();
    if (!agent.empty()) filter = greq::MapFilter::goals_of_agent(agent);
    const greq::MapFormat map_format =
        format == "freemind" ? greq::MapFormat::Freemind : greq::MapFormat::Dot;
    auto result = greq::emit_mindmap(*model, filter, map_format);
    if (const auto* err = std::get_if<greq::MindmapError>(&result)) {
      std::cerr << "greq: " << err->message << "\n";
      return kUsageOrParseFailure;
    }
    return emit_to(out_path, std::get<std::string>(result));
  }

  if (appmodel->parsed()) {
    auto result = greq::emit_app_model(*model);
    if (const auto* refusal = std::get_if<greq::AppModelRefusal>(&result)) {
      std::cerr << "greq: model has blocking diagnostics:";
      for (const std::string& id : refusal->blocking_rules) std::cerr << " " << id;
      std::cerr << "\n";
      return kDiagnosticErrors;
    }
    return emit_to(out_path,
                   greq::serialize_app_model(std::get<greq::AppModel>(result)));
  }

  if (metrics->parsed()) {
    const greq::DiagnosticReport report = greq::run_diagnostics(*model);
    const greq::MetricsReport m = greq::compute_metrics(*model, report);
    std::cout << (json ? greq::render_metrics_json(m)
                       : greq::render_metrics_text(m));
    return kOk;
  }

  if (export_cmd->parsed())
    return emit_to(out_path, greq::canonical_serialize(*model));

  return kUsageOrParseFailure;
}
