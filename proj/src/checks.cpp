#include <algorithm>
#include <functional>
#include <map>

#include "wvc/decomp.hpp"
#include "wvc/engines.hpp"
#include "wvc/harness.hpp"

namespace wvc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::vacuous: return "vacuous";
    case Verdict::fail: return "FAIL";
  }
  return "vacuous";
}

C5Partition c5_partition(const WeightedGraph& g, const HoleWitness& c) {
  if (c.length() != 5 || !is_induced_cycle(g, c.vertices)) {
    throw InputError("c5_partition needs an induced C5");
  }
  C5Partition out;
  out.cycle = c;
  auto bit = [](int i) { return 1U << (((i % 5) + 5) % 5); };
  std::vector<bool> on_cycle(g.size(), false);
  for (Vertex v : c.vertices) on_cycle[v] = true;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (on_cycle[x]) continue;
    unsigned mask = 0;
    for (int i = 0; i < 5; ++i) {
      if (g.adjacent(x, c.vertices[i])) mask |= bit(i);
    }
    bool placed = true;
    if (mask == 0) {
      out.r.push_back(x);
    } else if (mask == 31) {
      out.t.push_back(x);
    } else {
      placed = false;
      for (int i = 0; i < 5 && !placed; ++i) {
        if (mask == (bit(i - 1) | bit(i + 1))) {
          out.w[i].push_back(x);
        } else if (mask == (bit(i - 1) | bit(i) | bit(i + 1))) {
          out.x[i].push_back(x);
        } else if (mask == (bit(i) | bit(i + 1) | bit(i - 2))) {
          out.y[i].push_back(x);
        } else if (mask == (31U & ~bit(i))) {
          out.z[i].push_back(x);
        } else {
          continue;
        }
        placed = true;
      }
    }
    if (!placed) out.overflow.push_back(x);
  }
  return out;
}

namespace {

using CheckFn = std::function<StructureReport(const WeightedGraph&, const CheckOptions&)>;

StructureReport vacuous(std::string detail) { return {{}, Verdict::vacuous, std::move(detail), {}}; }
StructureReport pass(std::string detail) { return {{}, Verdict::pass, std::move(detail), {}}; }
StructureReport fail(std::string detail, std::vector<Vertex> witness) {
  return {{}, Verdict::fail, std::move(detail), std::move(witness)};
}

std::vector<Vertex> concat(std::vector<Vertex> a, std::span<const Vertex> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Empty when g is prime and free of `patterns`, otherwise why not.
std::optional<std::string> prime_and_free(const WeightedGraph& g,
                                          std::initializer_list<Pattern> patterns) {
  const std::vector<Pattern> list(patterns);
  if (auto verdict = is_free(g, list); !verdict.free) return "contains " + verdict.pattern;
  if (!is_prime(g)) return "not prime";
  return std::nullopt;
}

int unit_chi(const WeightedGraph& g, const CheckOptions& options) {
  return oracle_wvc(g.with_unit_weights(), options.search).class_count();
}

StructureReport long_odd_hole_triangle_free(const WeightedGraph& g, const CheckOptions& options) {
  if (auto why = prime_and_free(g, {Pattern::house(), Pattern::co_dart()})) return vacuous(*why);
  std::optional<HoleWitness> hole;
  try {
    hole = find_odd_hole_between(g, 7, options.max_hole_length, options.hole_budget);
  } catch (const BudgetExceeded&) {
    return vacuous("odd hole search over budget");
  }
  if (!hole) return vacuous("no odd hole of length 7.." + std::to_string(options.max_hole_length));
  if (auto tri = find_triangle(g)) return fail("triangle next to an odd hole", concat(*tri, hole->vertices));
  return pass("triangle-free");
}

StructureReport p5dart_c5_small_or_triad_free(const WeightedGraph& g, const CheckOptions&) {
  if (auto why = prime_and_free(g, {Pattern::path(5), Pattern::dart()})) return vacuous(*why);
  const auto c5 = find_c5(g);
  if (!c5) return vacuous("no C5");
  if (g.size() <= 18) return pass("at most 18 vertices");
  if (auto triad = find_triad(g)) {
    return fail("more than 18 vertices and a triad", concat(*triad, c5->vertices));
  }
  return pass("triad-free");
}

StructureReport hammer_house_perfect_or_triangle_free(const WeightedGraph& g,
                                                      const CheckOptions& options) {
  if (auto why = prime_and_free(g, {Pattern::hammer(), Pattern::house()})) return vacuous(*why);
  const auto tri = find_triangle(g);
  if (!tri) return pass("triangle-free");
  try {
    if (auto hole = find_odd_hole(g, options.max_hole_length, options.hole_budget)) {
      return fail("triangle and odd hole", concat(*tri, hole->vertices));
    }
    if (auto anti = find_odd_antihole(g, options.max_hole_length, options.hole_budget)) {
      return fail("triangle and odd antihole", concat(*tri, anti->vertices));
    }
  } catch (const BudgetExceeded&) {
    return vacuous("perfection proxy over budget");
  }
  if (g.size() <= options.oracle_max_vertices) {
    const int chi = unit_chi(g, options);
    const auto omega = max_weight_clique(g.with_unit_weights()).weight;
    if (chi != omega) {
      return fail("chi " + std::to_string(chi) + " != omega " + std::to_string(omega), *tri);
    }
  }
  return pass("perfect (bounded search)");
}

StructureReport house_bull_p5c5_free_or_triangle_free(const WeightedGraph& g, const CheckOptions&) {
  if (auto why = prime_and_free(g, {Pattern::house(), Pattern::bull()})) return vacuous(*why);
  const auto tri = find_triangle(g);
  if (!tri) return pass("triangle-free");
  if (auto p5 = find_p5(g)) return fail("triangle and P5", concat(*tri, *p5));
  if (auto c5 = find_c5(g)) return fail("triangle and C5", concat(*tri, c5->vertices));
  return pass("(P5,C5)-free");
}

StructureReport forkbull_long_hole(const WeightedGraph& g, const CheckOptions&) {
  if (auto why = prime_and_free(g, {Pattern::fork(), Pattern::bull()})) return vacuous(*why);
  const auto hole = find_hole_at_least(g, 6);
  if (!hole) return vacuous("no hole of length >= 6");
  if (hole->length() == g.size()) return pass("the hole itself");
  if (bipartition(g).sides) return pass("bipartite");
  return fail("neither the hole nor bipartite", concat(bipartition(g).odd_cycle, hole->vertices));
}

StructureReport forkbull_p5_class(const WeightedGraph& g, const CheckOptions& options) {
  if (auto why = prime_and_free(g, {Pattern::fork(), Pattern::bull()})) return vacuous(*why);
  if (find_hole_at_least(g, 6)) return vacuous("hole of length >= 6");
  const auto path = find_p5(g);
  if (!path) return vacuous("no P5");
  const bool cutset = find_clique_cutset(g).has_value();
  try {
    const auto ctx = build_p5_context(g, *path);
    if (auto failure = verify_p5_context(g, ctx)) return fail(*failure, *path);
  } catch (const StructureViolation& e) {
    return fail(e.claim(), e.witness());
  }
  const VertexSet s{(*path)[0], (*path)[2], (*path)[4]};
  VertexSet rest;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (std::find(s.begin(), s.end(), v) == s.end()) rest.push_back(v);
  }
  const int chi = unit_chi(g, options);
  const int chi_rest = rest.empty() ? 0 : unit_chi(g.induced(rest).graph, options);
  if (chi != chi_rest + 1) {
    if (cutset) return pass("clique cutset");
    return fail("chi " + std::to_string(chi) + " != chi(G - {v1,v3,v5}) + 1 = " +
                    std::to_string(chi_rest + 1),
                *path);
  }
  // The weighted reading: one copy of each of v1, v3, v5 forms a class.
  std::vector<Weight> w(g.weights().begin(), g.weights().end());
  for (Vertex v : s) --w[v];
  VertexSet keep;
  std::vector<Weight> kept_weights;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (w[v] > 0) {
      keep.push_back(v);
      kept_weights.push_back(w[v]);
    }
  }
  const int chi_w = oracle_wvc(g, options.search).class_count();
  const int chi_w_rest =
      keep.empty() ? 0
                   : oracle_wvc(g.induced(keep).graph.with_weights(kept_weights), options.search)
                         .class_count();
  if (chi_w != chi_w_rest + 1) {
    if (cutset) return pass("clique cutset");
    return fail("weighted: chi_w " + std::to_string(chi_w) + " != chi_w after decrement + 1 = " +
                    std::to_string(chi_w_rest + 1),
                *path);
  }
  return pass(cutset ? "{v1,v3,v5} is a class, clique cutset present" : "{v1,v3,v5} is a class");
}

StructureReport bull_hole_neighborhood(const WeightedGraph& g, const CheckOptions&) {
  if (auto verdict = is_free(g, std::vector<Pattern>{Pattern::bull()}); !verdict.free) {
    return vacuous("contains bull");
  }
  const auto hole = find_hole_at_least(g, 6);
  if (!hole) return vacuous("no hole of length >= 6");
  for (Vertex x = 0; x < g.size(); ++x) {
    if (std::find(hole->vertices.begin(), hole->vertices.end(), x) != hole->vertices.end()) continue;
    if (hole_neighborhood_class(g, *hole, x).kind == HoleNeighborhood::other) {
      return fail("vertex " + std::to_string(x) + " has an unclassified neighbourhood on the hole",
                  concat({x}, hole->vertices));
    }
  }
  return pass("all neighbourhoods classified");
}

// Shared hypothesis of the C5 partition properties.
using PartitionCheck = std::function<StructureReport(const WeightedGraph&, const C5Partition&)>;

CheckFn with_c5_partition(PartitionCheck body) {
  return [body = std::move(body)](const WeightedGraph& g, const CheckOptions&) {
    if (auto why = prime_and_free(g, {Pattern::path(5), Pattern::dart()})) return vacuous(*why);
    const auto c5 = find_c5(g);
    if (!c5) return vacuous("no C5");
    return body(g, c5_partition(g, *c5));
  };
}

StructureReport c5_classified(const WeightedGraph&, const C5Partition& part) {
  if (!part.overflow.empty()) {
    return fail("vertices outside every class", concat(part.overflow, part.cycle.vertices));
  }
  return pass("all vertices classified");
}

StructureReport c5_w_stable(const WeightedGraph& g, const C5Partition& part) {
  for (int i = 0; i < 5; ++i) {
    if (!is_stable(g, part.w[i])) return fail("W_" + std::to_string(i + 1) + " not stable", part.w[i]);
  }
  return pass("every W_i stable");
}

StructureReport c5_y_at_most_2(const WeightedGraph&, const C5Partition& part) {
  VertexSet y;
  for (const auto& yi : part.y) y.insert(y.end(), yi.begin(), yi.end());
  if (y.size() > 2) return fail("|Y| = " + std::to_string(y.size()), y);
  return pass("|Y| <= 2");
}

StructureReport c5_r_at_most_1(const WeightedGraph&, const C5Partition& part) {
  if (part.r.size() > 1) return fail("|R| = " + std::to_string(part.r.size()), part.r);
  return pass("|R| <= 1");
}

StructureReport c5_w_at_most_2(const WeightedGraph&, const C5Partition& part) {
  for (int i = 0; i < 5; ++i) {
    if (part.w[i].size() > 2) {
      return fail("|W_" + std::to_string(i + 1) + "| = " + std::to_string(part.w[i].size()), part.w[i]);
    }
  }
  return pass("every |W_i| <= 2");
}

StructureReport c5_cxz_triad_free(const WeightedGraph& g, const C5Partition& part) {
  VertexSet s = part.cycle.vertices;
  for (int i = 0; i < 5; ++i) {
    s.insert(s.end(), part.x[i].begin(), part.x[i].end());
    s.insert(s.end(), part.z[i].begin(), part.z[i].end());
  }
  std::sort(s.begin(), s.end());
  const auto sub = g.induced(s);
  if (auto triad = find_triad(sub.graph)) {
    std::vector<Vertex> witness;
    for (Vertex v : *triad) witness.push_back(sub.to_parent[v]);
    return fail("triad in C u X u Z", witness);
  }
  return pass("C u X u Z triad-free");
}

StructureReport differential(const WeightedGraph& g, const CheckOptions& options) {
  if (options.label != ClassLabel::automatic) {
    if (auto verdict = is_free(g, forbidden_patterns(options.label)); !verdict.free) {
      return vacuous("not in " + to_string(options.label));
    }
  } else {
    const auto memberships = recognize(g);
    if (std::none_of(memberships.begin(), memberships.end(),
                     [](const Membership& m) { return m.member; })) {
      return vacuous("in no supported class");
    }
  }
  PipelineResult result;
  try {
    PipelineOptions pipeline_options;
    pipeline_options.search = options.search;
    result = run_pipeline(options.label, g, pipeline_options);
  } catch (const StructureViolation& e) {
    return fail(e.claim(), e.witness());
  } catch (const BudgetExceeded&) {
    return vacuous("pipeline over budget");
  }
  int expected = 0;
  try {
    expected = oracle_wvc(g, options.search).class_count();
  } catch (const BudgetExceeded&) {
    return vacuous("oracle over budget");
  }
  if (auto verdict = validate_coloring(g, result.coloring); !verdict.valid) {
    return fail(to_string(result.label) + " certificate invalid: " + verdict.reason, {});
  }
  if (result.coloring.class_count() != expected) {
    return fail(to_string(result.label) + " gives " + std::to_string(result.coloring.class_count()) +
                    ", oracle " + std::to_string(expected),
                {});
  }
  return pass(to_string(result.label) + " agrees with the oracle");
}

const std::map<std::string, CheckFn, std::less<>>& registry() {
  static const std::map<std::string, CheckFn, std::less<>> checks = {
      {"long-odd-hole-triangle-free", long_odd_hole_triangle_free},
      {"p5dart-c5-small-or-triad-free", p5dart_c5_small_or_triad_free},
      {"hammer-house-perfect-or-triangle-free", hammer_house_perfect_or_triangle_free},
      {"house-bull-p5c5-free-or-triangle-free", house_bull_p5c5_free_or_triangle_free},
      {"forkbull-long-hole", forkbull_long_hole},
      {"forkbull-p5-class", forkbull_p5_class},
      {"bull-hole-neighborhood", bull_hole_neighborhood},
      {"c5-classified", with_c5_partition(c5_classified)},
      {"c5-w-stable", with_c5_partition(c5_w_stable)},
      {"c5-y-at-most-2", with_c5_partition(c5_y_at_most_2)},
      {"c5-r-at-most-1", with_c5_partition(c5_r_at_most_1)},
      {"c5-w-at-most-2", with_c5_partition(c5_w_at_most_2)},
      {"c5-cxz-triad-free", with_c5_partition(c5_cxz_triad_free)},
      {"differential", differential},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "long-odd-hole-triangle-free",
      "p5dart-c5-small-or-triad-free",
      "hammer-house-perfect-or-triangle-free",
      "house-bull-p5c5-free-or-triangle-free",
      "forkbull-long-hole",
      "forkbull-p5-class",
      "bull-hole-neighborhood",
      "c5-classified",
      "c5-w-stable",
      "c5-y-at-most-2",
      "c5-r-at-most-1",
      "c5-w-at-most-2",
      "c5-cxz-triad-free",
      "differential",
  };
  return ids;
}

bool is_check_id(std::string_view id) { return registry().contains(id); }

StructureReport check_structure(std::string_view check, const WeightedGraph& g,
                                const CheckOptions& options) {
  const auto it = registry().find(check);
  if (it == registry().end()) throw InputError("unknown check '" + std::string(check) + "'");
  StructureReport report = it->second(g, options);
  report.check = std::string(check);
  return report;
}

}  // namespace wvc
