// One line per acceptance criterion: "AC<k> PASS|FAIL <summary>".
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "support/random_graphs.hpp"
#include "wvc/decomp.hpp"
#include "wvc/engines.hpp"
#include "wvc/harness.hpp"
#include "wvc/io.hpp"
#include "wvc/pipelines.hpp"

using namespace wvc;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
};

bool report(const char* id, const Outcome& o) {
  std::cout << id << ' ' << (o.ok ? "PASS" : "FAIL") << ' ' << o.summary << std::endl;
  return o.ok;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome differential_pipelines() {
  const auto start = std::chrono::steady_clock::now();
  constexpr int kInstances = 500;
  const double densities[] = {0.25, 0.5, 0.75};
  std::ostringstream out;
  int mismatches = 0;
  int invalid = 0;
  int missing = 0;
  int large = 0;
  for (ClassLabel label : concrete_classes()) {
    int done = 0;
    for (int k = 0; done < kInstances && k < 4 * kInstances; ++k) {
      GenSpec spec;
      spec.min_n = 4;
      spec.n = 12;
      spec.p = densities[k % 3];
      spec.max_weight = 3;
      spec.filter = forbidden_patterns(label);
      spec.seed = trial_seed(0xac1, static_cast<std::uint64_t>(k) * 8 + static_cast<int>(label));
      // Rejection sampling alone favours small n; grow mode reaches n = 12.
      if (k % 2 == 0) spec.mode = GenMode::grow;
      const auto g = generate(spec);
      if (!g) continue;
      ++done;
      if (g->size() >= 10) ++large;
      const auto result = run_pipeline(label, *g);
      if (!validate_coloring(*g, result.coloring).valid) ++invalid;
      if (result.coloring.class_count() != oracle_wvc(*g).class_count()) ++mismatches;
    }
    missing += kInstances - done;
    out << to_string(label) << '=' << done << ' ';
  }
  const double elapsed = seconds_since(start);
  out << "with-n>=10=" << large << " mismatches=" << mismatches << " invalid=" << invalid << " seconds=" << elapsed;
  return {mismatches == 0 && invalid == 0 && missing == 0 && elapsed < 600.0, out.str()};
}

Outcome hyperhole_formula() {
  int total = 0;
  int bad = 0;
  for (int len : {5, 7}) {
    std::vector<Weight> sizes(len, 1);
    std::function<void(int)> each = [&](int i) {
      if (i == len) {
        ++total;
        const Hyperhole h{sizes};
        const Weight n = h.vertex_count();
        const Weight formula = std::max<Weight>(h.clique_number(), (2 * n + len - 2) / (len - 1));
        const auto c = hyperhole_wvc(h);
        const auto cycle = make_cycle(len, sizes);
        const int blown = oracle_wvc(blow_up(cycle).graph).class_count();
        if (c.class_count() != formula || blown != formula || !validate_coloring(cycle, c).valid) ++bad;
        return;
      }
      for (Weight s = 1; s <= 3; ++s) {
        sizes[i] = s;
        each(i + 1);
      }
    };
    each(0);
  }
  const bool anchors = hyperhole_wvc(Hyperhole{std::vector<Weight>(5, 1)}).class_count() == 3 &&
                       hyperhole_wvc(Hyperhole{std::vector<Weight>(7, 1)}).class_count() == 3;
  return {bad == 0 && anchors, "vectors=" + std::to_string(total) + " mismatches=" + std::to_string(bad) +
                                   " C5=3 C7=3 " + (anchors ? "ok" : "wrong")};
}

int count_outcome(const CheckTally& t, const std::string& detail) {
  const auto it = t.pass_outcomes.find(detail);
  return it == t.pass_outcomes.end() ? 0 : it->second;
}

Outcome structure_campaigns() {
  constexpr int kTrials = 300;
  std::ostringstream out;
  int failures = 0;
  bool rates_ok = true;
  for (const auto& id : check_ids()) {
    const std::vector<std::string> one{id};
    const auto result = campaign(tuned_spec(id), one, kTrials);
    const auto& t = result.tallies.front();
    failures += t.fail;
    out << id << " pass=" << t.pass << " vacuous=" << t.vacuous << " fail=" << t.fail
        << " vacuity=" << std::lround(100 * t.vacuity_rate()) << "%";
    if (id == "forkbull-long-hole" || id == "forkbull-p5-class") {
      int non_vacuous = t.pass + t.fail;
      // Passes through the clique-cutset alternative do not exercise the
      // colour-class conclusion.
      if (id == "forkbull-p5-class") {
        non_vacuous -= count_outcome(t, "clique cutset") +
                       count_outcome(t, "{v1,v3,v5} is a class, clique cutset present");
      }
      const double rate = static_cast<double>(non_vacuous) / kTrials;
      out << " strict-non-vacuous=" << std::lround(100 * rate) << "%";
      if (rate <= 0.10) rates_ok = false;
    }
    if (t.flagged()) rates_ok = false;
    out << "; ";
  }
  out << "total-fail=" << failures;
  return {failures == 0 && rates_ok, out.str()};
}

Outcome decomposition_recombination() {
  Rng rng(0xac4);
  auto exact = [](const WeightedGraph& h) { return oracle_wvc(h); };
  int graphs = 0;
  int connected = 0;
  int bad = 0;
  while (graphs < 500 || connected < 500) {
    const int n = static_cast<int>(rng.between(1, 10));
    auto g = testing_support::random_graph(rng, n, rng.unit(), 3);
    std::vector<Weight> w(g.weights().begin(), g.weights().end());
    Weight sum = g.total_weight();
    for (int i = 0; sum > 16; i = (i + 1) % n) {
      if (w[i] > 1) {
        --w[i];
        --sum;
      }
    }
    g = g.with_weights(w);
    const int want = oracle_wvc(g).class_count();
    if (want != oracle::chromatic_weighted(g)) ++bad;
    const auto by_modules = wvc_by_modules(g, exact);
    if (by_modules.class_count() != want || !validate_coloring(g, by_modules).valid) ++bad;
    ++graphs;
    if (is_connected(g)) {
      const auto by_blocks = wvc_by_cblocks(g, exact);
      if (by_blocks.class_count() != want || !validate_coloring(g, by_blocks).valid) ++bad;
      ++connected;
    }
  }
  return {bad == 0, "graphs=" + std::to_string(graphs) + " connected=" + std::to_string(connected) +
                        " mismatches=" + std::to_string(bad)};
}

Outcome detectors() {
  int pattern_checks = 0;
  int bad = 0;
  const auto catalog = Pattern::catalog();
  for (unsigned code = 0; code < 1024; ++code) {
    const auto g = testing_support::five_vertex_graph(code);
    for (const auto& p : catalog) {
      ++pattern_checks;
      const auto got = find_induced(g, p);
      const auto want = oracle::induced_embedding(g, p.graph());
      if (got.has_value() != want.has_value() || (got && *got != *want)) ++bad;
    }
  }
  Rng rng(0xac5);
  int holes = 0;
  for (; holes < 2000; ++holes) {
    const auto g = testing_support::random_graph(rng, static_cast<int>(rng.between(0, 9)), rng.unit());
    const auto hole = find_hole_at_least(g, 6);
    if (hole.has_value() != oracle::has_hole_at_least(g, 6)) ++bad;
    if (hole && (hole->length() < 6 || !is_induced_cycle(g, hole->vertices))) ++bad;
  }
  int matchings = 0;
  for (; matchings < 2000; ++matchings) {
    const auto g = testing_support::random_graph(rng, static_cast<int>(rng.between(0, 7)), rng.unit());
    if (static_cast<int>(blossom_max_matching(g).size()) != oracle::max_matching_size(g)) ++bad;
  }
  return {bad == 0, "pattern-checks=" + std::to_string(pattern_checks) + " holes=" + std::to_string(holes) +
                        " matchings=" + std::to_string(matchings) + " mismatches=" + std::to_string(bad)};
}

std::string run_capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  status = pclose(pipe);
  return out;
}

Outcome determinism(const std::string& cli) {
  int differing = 0;
  int runs = 0;
  // Library level.
  for (const auto& id : check_ids()) {
    const std::vector<std::string> one{id};
    GenSpec spec = tuned_spec(id);
    spec.seed = 99;
    ++runs;
    if (campaign(spec, one, 10).to_json() != campaign(spec, one, 10).to_json()) ++differing;
  }
  Rng rng(0xac6);
  for (int t = 0; t < 100; ++t) {
    const auto g = testing_support::random_graph(rng, static_cast<int>(rng.between(1, 10)), rng.unit(), 3);
    for (const auto& m : recognize(g)) {
      if (!m.member) continue;
      const auto a = run_pipeline(m.label, g);
      const auto b = run_pipeline(m.label, g);
      ++runs;
      if (a.trace != b.trace || a.coloring.classes != b.coloring.classes) ++differing;
    }
  }
  // Command level.
  if (!cli.empty()) {
    const std::string dir = "acceptance_work";
    std::filesystem::create_directories(dir);
    const std::string graph = dir + "/g.dimacs";
    int status = 0;
    write_text_file(graph, run_capture(cli + " generate --n 11 --p 0.5 --class forkbull --mode grow --seed 5 --max-weight 3",
                                       status));
    const std::vector<std::string> commands = {
        cli + " generate --n 11 --p 0.5 --class p5bull --mode grow --seed 5 --max-weight 3 --format json",
        cli + " color " + graph + " --trace --verify",
        cli + " oracle " + graph + " --verify",
        cli + " recognize " + graph,
        cli + " check --theorem all --trials 15 --seed 12",
    };
    for (const auto& c : commands) {
      int s1 = 0;
      int s2 = 0;
      const auto first = run_capture(c, s1);
      const auto second = run_capture(c, s2);
      ++runs;
      if (first != second || s1 != s2 || s1 != 0 || first.empty()) ++differing;
    }
  }
  return {differing == 0, "runs=" + std::to_string(runs) + " differing=" + std::to_string(differing) +
                              (cli.empty() ? " (library only)" : " (library and CLI)")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  bool ok = true;
  ok &= report("AC1", differential_pipelines());
  ok &= report("AC2", hyperhole_formula());
  ok &= report("AC3", structure_campaigns());
  ok &= report("AC4", decomposition_recombination());
  ok &= report("AC5", detectors());
  ok &= report("AC6", determinism(cli));
  return ok ? 0 : 1;
}
