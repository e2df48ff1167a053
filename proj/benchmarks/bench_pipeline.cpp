#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "greq/diagnostics.hpp"
#include "greq/document.hpp"
#include "greq/interchange.hpp"
#include "greq/parser.hpp"

namespace {

std::string fixture_source() {
  std::ifstream in(std::string(GREQ_FIXTURE_DIR) + "/conference.greq",
                   std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Fixture repeated with renamed declarations, to scale input size.
std::string scaled_source(int copies) {
  const std::string base = fixture_source();
  std::string out;
  for (int i = 0; i < copies; ++i) {
    std::string copy = base;
    const std::string suffix = "_" + std::to_string(i);
    for (const char* name :
         {"Auteur", "Relecteur", "Article", "Rapport", "commente",
          "Gérer les soumissions", "Déposer une soumission",
          "Analyser une soumission", "Comité de programme"}) {
      std::string from = name;
      size_t pos = 0;
      while ((pos = copy.find(from, pos)) != std::string::npos) {
        copy.insert(pos + from.size(), suffix);
        pos += from.size() + suffix.size();
      }
    }
    out += copy + "\n";
  }
  return out;
}

void BM_Parse(benchmark::State& state) {
  const std::string source = scaled_source(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto result = greq::parse_source(source, "bench.greq");
    benchmark::DoNotOptimize(result);
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(source.size()));
}
BENCHMARK(BM_Parse)->Arg(1)->Arg(16)->Arg(128);

void BM_Diagnostics(benchmark::State& state) {
  const std::string source = scaled_source(static_cast<int>(state.range(0)));
  const greq::Model model = greq::parse_source(source, "bench.greq").model;
  for (auto _ : state) {
    auto report = greq::run_diagnostics(model);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_Diagnostics)->Arg(1)->Arg(16)->Arg(64);

void BM_Serialize(benchmark::State& state) {
  const greq::Model model =
      greq::parse_source(scaled_source(16), "bench.greq").model;
  for (auto _ : state) {
    std::string doc = greq::canonical_serialize(model);
    benchmark::DoNotOptimize(doc);
  }
}
BENCHMARK(BM_Serialize);

void BM_Document(benchmark::State& state) {
  const greq::Model model =
      greq::parse_source(scaled_source(16), "bench.greq").model;
  const greq::DiagnosticReport report = greq::run_diagnostics(model);
  for (auto _ : state) {
    std::string doc = greq::emit_document(model, report);
    benchmark::DoNotOptimize(doc);
  }
}
BENCHMARK(BM_Document);

}  // namespace

BENCHMARK_MAIN();
