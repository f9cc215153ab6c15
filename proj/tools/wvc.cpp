#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wvc/engines.hpp"
#include "wvc/harness.hpp"
#include "wvc/io.hpp"
#include "wvc/pipelines.hpp"

namespace {

using nlohmann::json;
using namespace wvc;

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotInClass = 2,
  kStructureViolation = 3,
  kBudget = 4,
  kGenerationExhausted = 5,
  kCheckFailed = 6,
  kVerificationFailed = 7,
};

constexpr const char* kOutDirEnv = "WVC_OUT_DIR";

struct InputOptions {
  std::string path;
  std::string format;  // empty: detect
};

WeightedGraph load_graph(const InputOptions& in) {
  std::optional<GraphFormat> format;
  if (!in.format.empty()) {
    format = parse_graph_format(in.format);
    if (!format) throw InputError("unknown format '" + in.format + "'");
  }
  const std::string text = in.path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                          : read_text_file(in.path);
  return parse_graph(text, format);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

void emit_json(const json& doc, const std::string& out_path) { emit(doc.dump(2) + "\n", out_path); }

// Validation from the serialized report alone.
ColoringVerdict verify_serialized(const WeightedGraph& g, const std::string& serialized) {
  const json reparsed = json::parse(serialized);
  return validate_coloring(g, coloring_from_json(reparsed.at("classes")));
}

json trace_to_json(const PipelineTrace& trace, bool full) {
  json doc{{"steps", trace.entries.size()},
           {"perfection_misses", trace.perfection_misses},
           {"decrement_steps", trace.decrement_steps}};
  if (full) {
    doc["entries"] = json::array();
    for (const auto& e : trace.entries) {
      doc["entries"].push_back({{"stage", e.stage}, {"detail", e.detail}, {"justification", e.justification}});
    }
  }
  return doc;
}

int finish_verified(json report, const WeightedGraph& g, bool verify, const std::string& out) {
  int code = kOk;
  if (verify) {
    const auto verdict = verify_serialized(g, report.dump());
    report["verified"] = verdict.valid;
    if (!verdict.valid) {
      report["verification_error"] = verdict.reason;
      code = kVerificationFailed;
    }
  } else {
    report["verified"] = false;
  }
  emit_json(report, out);
  return code;
}

struct ColorOptions {
  InputOptions input;
  std::string label = "auto";
  bool verify = false;
  bool trace = false;
  bool timings = false;
  std::uint64_t budget = SearchOptions{}.node_budget;
  std::string out;
};

int cmd_color(const ColorOptions& o) {
  const auto label = parse_class_label(o.label);
  if (!label) throw InputError("unknown class '" + o.label + "'");
  const WeightedGraph g = load_graph(o.input);
  PipelineOptions options;
  options.search.node_budget = o.budget;
  const auto start = std::chrono::steady_clock::now();
  const PipelineResult result = run_pipeline(*label, g, options);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  json report{{"class", to_string(result.label)},
              {"n", g.size()},
              {"chi_w", result.coloring.class_count()},
              {"classes", coloring_to_json(result.coloring)},
              {"trace", trace_to_json(result.trace, o.trace)}};
  if (o.timings) report["timings"] = {{"total_ms", elapsed}};
  return finish_verified(std::move(report), g, o.verify, o.out);
}

struct OracleOptions {
  InputOptions input;
  std::uint64_t budget = SearchOptions{}.node_budget;
  bool verify = false;
  std::string out;
};

int cmd_oracle(const OracleOptions& o) {
  const WeightedGraph g = load_graph(o.input);
  SearchOptions options;
  options.node_budget = o.budget;
  const auto coloring = oracle_wvc(g, options);
  json report{{"class", "oracle"},
              {"n", g.size()},
              {"chi_w", coloring.class_count()},
              {"classes", coloring_to_json(coloring)}};
  return finish_verified(std::move(report), g, o.verify, o.out);
}

struct RecognizeOptions {
  InputOptions input;
  std::string out;
};

int cmd_recognize(const RecognizeOptions& o) {
  const WeightedGraph g = load_graph(o.input);
  json report{{"n", g.size()}, {"classes", json::object()}};
  json first = nullptr;
  for (const auto& m : recognize(g)) {
    json entry{{"member", m.member}};
    if (!m.member) {
      entry["pattern"] = m.pattern;
      entry["witness"] = m.witness;
    } else if (first.is_null()) {
      first = to_string(m.label);
    }
    report["classes"][to_string(m.label)] = entry;
  }
  report["auto"] = first;
  emit_json(report, o.out);
  return kOk;
}

// Generator flags shared by generate and check. Fields are applied only
// when given, so check can start from a tuned spec.
struct GenFlags {
  int n = 10;
  int min_n = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string label;
  std::vector<std::string> filter;
  bool prime = false;
  Weight max_weight = 1;
  int max_attempts = 1000;
  std::string mode = "erdos-renyi";
  std::string seed_structure = "none";
  int hole_min = 6;
  int hole_max = 6;
};

void add_gen_flags(CLI::App* app, GenFlags& f) {
  app->add_option("--n", f.n, "Number of vertices (upper end when --min-n is set)");
  app->add_option("--min-n", f.min_n, "Draw n uniformly from [min-n, n] per attempt");
  app->add_option("--p", f.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  app->add_option("--seed", f.seed, "Random seed");
  app->add_option("--class", f.label, "Filter by class: p5dart, p5banner, p5bull, forkbull");
  app->add_option("--filter", f.filter, "Forbidden patterns by name (P5, dart, bull, ...)")->delimiter(',');
  app->add_flag("--prime", f.prime, "Reject non-prime graphs");
  app->add_option("--max-weight", f.max_weight, "Weights uniform in [1, max-weight]");
  app->add_option("--max-attempts", f.max_attempts, "Rejection-sampling attempts");
  app->add_option("--mode", f.mode, "erdos-renyi or grow")->check(CLI::IsMember({"erdos-renyi", "grow"}));
  app->add_option("--seed-structure", f.seed_structure, "Grow mode start: none, hole or p5")
      ->check(CLI::IsMember({"none", "hole", "p5"}));
  app->add_option("--hole-min", f.hole_min, "Shortest planted hole");
  app->add_option("--hole-max", f.hole_max, "Longest planted hole");
}

GenSpec apply_gen_flags(const CLI::App* app, const GenFlags& f, GenSpec spec) {
  auto given = [app](const char* name) { return app->count(name) > 0; };
  if (given("--n")) spec.n = f.n;
  if (given("--min-n")) spec.min_n = f.min_n;
  if (given("--p")) spec.p = f.p;
  if (given("--seed")) spec.seed = f.seed;
  if (given("--class")) {
    const auto label = parse_class_label(f.label);
    if (!label || *label == ClassLabel::automatic) throw InputError("unknown class '" + f.label + "'");
    spec.filter = forbidden_patterns(*label);
  }
  if (given("--filter")) {
    spec.filter.clear();
    for (const auto& name : f.filter) spec.filter.push_back(Pattern::by_name(name));
  }
  if (given("--prime")) spec.require_prime = f.prime;
  if (given("--max-weight")) spec.max_weight = f.max_weight;
  if (given("--max-attempts")) spec.max_attempts = f.max_attempts;
  if (given("--mode")) spec.mode = f.mode == "grow" ? GenMode::grow : GenMode::erdos_renyi;
  if (given("--seed-structure")) {
    spec.seed_structure = f.seed_structure == "hole" ? SeedStructure::hole
                          : f.seed_structure == "p5" ? SeedStructure::p5
                                                     : SeedStructure::none;
  }
  if (given("--hole-min")) spec.hole_min = f.hole_min;
  if (given("--hole-max")) spec.hole_max = f.hole_max;
  return spec;
}

struct GenerateOptions {
  GenFlags gen;
  std::string format = "dimacs";
  std::string out;
};

int cmd_generate(const CLI::App* app, const GenerateOptions& o) {
  GenSpec spec = apply_gen_flags(app, o.gen, GenSpec{});
  const auto format = parse_graph_format(o.format);
  if (!format) throw InputError("unknown format '" + o.format + "'");
  const auto g = generate(spec);
  if (!g) {
    std::cerr << "generation exhausted " << spec.max_attempts << " attempts\n";
    return kGenerationExhausted;
  }
  emit(serialize_graph(*g, *format), o.out);
  return kOk;
}

struct CheckCliOptions {
  GenFlags gen;
  std::vector<std::string> checks;
  int trials = 100;
  std::string out_dir;
  std::string pipeline = "auto";
};

int cmd_check(const CLI::App* app, const CheckCliOptions& o) {
  std::vector<std::string> ids;
  for (const auto& t : o.checks) {
    if (t == "all") {
      ids = check_ids();
      break;
    }
    if (!is_check_id(t)) throw InputError("unknown check '" + t + "'");
    ids.push_back(t);
  }
  const auto pipeline = parse_class_label(o.pipeline);
  if (!pipeline) throw InputError("unknown class '" + o.pipeline + "'");
  CampaignOptions options;
  options.check.label = *pipeline;
  std::string out_dir = o.out_dir;
  if (out_dir.empty()) {
    if (const char* env = std::getenv(kOutDirEnv)) out_dir = env;
  }
  if (!out_dir.empty()) options.out_dir = out_dir;

  json summary{{"campaigns", json::array()}};
  int failures = 0;
  for (const auto& id : ids) {
    GenSpec spec = tuned_spec(id);
    if (id == "differential" && *pipeline != ClassLabel::automatic) spec.filter = forbidden_patterns(*pipeline);
    spec = apply_gen_flags(app, o.gen, spec);
    const std::vector<std::string> one{id};
    const auto result = campaign(spec, one, o.trials, options);
    failures += result.failures();
    json entry = result.to_json();
    entry["check"] = id;
    entry["seed"] = spec.seed;
    summary["campaigns"].push_back(std::move(entry));
  }
  summary["failures"] = failures;
  if (options.out_dir) write_text_file(*options.out_dir / "summary.json", summary.dump(2) + "\n");
  emit_json(summary, "");
  return failures > 0 ? kCheckFailed : kOk;
}

json error_report(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

int report_error(json doc, int code) {
  std::cerr << doc.at("message").get<std::string>() << "\n";
  std::cout << doc.dump(2) << "\n";
  return code;
}

void add_input(CLI::App* app, InputOptions& in) {
  app->add_option("input", in.path, "Graph file (DIMACS or JSON, '-' for stdin)")->required();
  app->add_option("--format", in.format, "dimacs or json (default: detect)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weighted vertex colouring for (P5,dart)-, (P5,banner)-, (P5,bull)- and "
               "(fork,bull)-free graphs"};
  app.require_subcommand(1);

  ColorOptions color;
  auto* color_cmd = app.add_subcommand("color", "Colour a graph with a class pipeline");
  add_input(color_cmd, color.input);
  color_cmd->add_option("--class", color.label, "auto, p5dart, p5banner, p5bull or forkbull");
  color_cmd->add_flag("--verify", color.verify, "Re-validate the serialized report");
  color_cmd->add_flag("--trace", color.trace, "Include every pipeline decision");
  color_cmd->add_flag("--timings", color.timings, "Include wall-clock timings");
  color_cmd->add_option("--budget", color.budget, "Search node budget");
  color_cmd->add_option("--out", color.out, "Write the report here instead of stdout");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact colouring by branch and bound");
  add_input(oracle_cmd, oracle.input);
  oracle_cmd->add_option("--budget", oracle.budget, "Search node budget");
  oracle_cmd->add_flag("--verify", oracle.verify, "Re-validate the serialized report");
  oracle_cmd->add_option("--out", oracle.out, "Write the report here instead of stdout");

  RecognizeOptions rec;
  auto* rec_cmd = app.add_subcommand("recognize", "Class membership with witnesses");
  add_input(rec_cmd, rec.input);
  rec_cmd->add_option("--out", rec.out, "Write the report here instead of stdout");

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "Seeded random instance");
  add_gen_flags(gen_cmd, gen.gen);
  gen_cmd->add_option("--format", gen.format, "dimacs or json");
  gen_cmd->add_option("--out", gen.out, "Write the graph here instead of stdout");

  CheckCliOptions check;
  auto* check_cmd = app.add_subcommand("check", "Structure-check campaign");
  check_cmd->add_option("--theorem,--check", check.checks, "Check id, repeatable, or 'all'")->required();
  check_cmd->add_option("--trials", check.trials, "Number of generated instances");
  check_cmd->add_option("--pipeline", check.pipeline, "Pipeline for the differential check");
  check_cmd->add_option("--out", check.out_dir,
                        std::string("Directory for counterexamples (default $") + kOutDirEnv + ")");
  add_gen_flags(check_cmd, check.gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*color_cmd) return cmd_color(color);
    if (*oracle_cmd) return cmd_oracle(oracle);
    if (*rec_cmd) return cmd_recognize(rec);
    if (*gen_cmd) return cmd_generate(gen_cmd, gen);
    if (*check_cmd) return cmd_check(check_cmd, check);
  } catch (const PreconditionError& e) {
    json doc = error_report("not-in-class", e.what());
    doc["pattern"] = e.pattern();
    doc["witness"] = e.witness();
    return report_error(std::move(doc), kNotInClass);
  } catch (const StructureViolation& e) {
    json doc = error_report("structure-violation", e.what());
    doc["block"] = graph_to_json(e.block());
    doc["witness"] = e.witness();
    return report_error(std::move(doc), kStructureViolation);
  } catch (const BudgetExceeded& e) {
    return report_error(error_report("budget-exceeded", e.what()), kBudget);
  } catch (const InputError& e) {
    return report_error(error_report("input", e.what()), kInputError);
  } catch (const std::exception& e) {
    return report_error(error_report("input", e.what()), kInputError);
  }
  return kOk;
}
