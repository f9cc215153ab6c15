#include <doctest.h>

#include "support/oracles.hpp"
#include "support/random_graphs.hpp"
#include "wvc/errors.hpp"
#include "wvc/pipelines.hpp"

using namespace wvc;

namespace {

void check_result(const WeightedGraph& g, const PipelineResult& r, int expected) {
  CHECK(validate_coloring(g, r.coloring).valid);
  CHECK(r.coloring.class_count() == expected);
}

WeightedGraph with_extra_vertex(const WeightedGraph& g, const std::vector<Vertex>& neighbours) {
  auto edges = g.edges();
  for (Vertex v : neighbours) edges.emplace_back(v, g.size());
  return WeightedGraph::build(g.size() + 1, edges);
}

}  // namespace

TEST_CASE("class labels") {
  CHECK(parse_class_label("auto") == ClassLabel::automatic);
  CHECK(parse_class_label("forkbull") == ClassLabel::forkbull);
  CHECK_FALSE(parse_class_label("nope"));
  CHECK(concrete_classes().size() == 4);
  CHECK(forbidden_patterns(ClassLabel::p5bull).size() == 2);
}

TEST_CASE("p5dart examples") {
  check_result(make_cycle(5), p5dart_wvc(make_cycle(5)), 3);
  check_result(make_complete(4), p5dart_wvc(make_complete(4)), 4);
  const auto c4 = blow_up(make_cycle(4), std::vector<Weight>{2, 1, 3, 1}).graph;
  check_result(c4, p5dart_wvc(c4), 4);
}

TEST_CASE("p5banner examples") {
  check_result(make_cycle(5), p5banner_wvc(make_cycle(5)), 3);
  const auto p4 = make_path(4, std::vector<Weight>{1, 2, 2, 1});
  check_result(p4, p5banner_wvc(p4), 4);
  const auto k1 = make_complete(1, std::vector<Weight>{7});
  check_result(k1, p5banner_wvc(k1), 7);
}

TEST_CASE("p5bull examples") {
  check_result(make_cycle(5), p5bull_wvc(make_cycle(5)), 3);
  const auto c4 = make_cycle(4, std::vector<Weight>{2, 1, 2, 1});
  check_result(c4, p5bull_wvc(c4), 3);
  const auto k3_k1 = WeightedGraph::build(4, {{0, 1}, {1, 2}, {0, 2}});
  check_result(k3_k1, p5bull_wvc(k3_k1), 3);
}

TEST_CASE("forkbull examples") {
  check_result(make_cycle(7), forkbull_wvc(make_cycle(7)), 3);
  const auto p5 = forkbull_wvc(make_path(5));
  check_result(make_path(5), p5, 2);
  const auto c6 = make_cycle(6, std::vector<Weight>{2, 1, 2, 1, 2, 1});
  check_result(c6, forkbull_wvc(c6), 3);
}

TEST_CASE("auto dispatch") {
  const auto c5 = auto_wvc(make_cycle(5));
  CHECK(c5.label == ClassLabel::p5dart);
  CHECK(c5.coloring.class_count() == 3);
  const auto c7 = auto_wvc(make_cycle(7));
  CHECK(c7.label == ClassLabel::forkbull);
  CHECK(c7.coloring.class_count() == 3);
  const auto bull = auto_wvc(Pattern::bull().graph());
  CHECK(bull.label == ClassLabel::p5dart);
  CHECK(bull.coloring.class_count() == 3);
}

TEST_CASE("membership failures carry witnesses") {
  try {
    p5bull_wvc(Pattern::bull().graph());
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.pattern() == Pattern::bull().name());
    CHECK(e.witness().size() == 5);
  }
  // P5 plus a claw hanging off the middle: contains P5, fork and bull-free
  // classes fail as well through the fork.
  const auto fork_p5 = with_extra_vertex(make_path(7), {3});
  CHECK_THROWS_AS(auto_wvc(fork_p5), PreconditionError);
}

TEST_CASE("recognize") {
  for (const auto& m : recognize(make_cycle(5))) CHECK(m.member);
  for (const auto& m : recognize(make_path(5))) {
    CHECK(m.member == (m.label == ClassLabel::forkbull));
    if (!m.member) CHECK(m.pattern == Pattern::path(5).name());
  }
  for (const auto& m : recognize(Pattern::dart().graph())) {
    if (m.label == ClassLabel::p5dart) CHECK_FALSE(m.member);
    if (m.label == ClassLabel::p5banner) CHECK(m.member);
  }
}

TEST_CASE("pipelines agree with blow-up colouring") {
  Rng rng(404);
  int covered[4] = {};
  for (int t = 0; t < 600; ++t) {
    const auto g = testing_support::random_graph(rng, static_cast<int>(rng.between(1, 8)), rng.unit(), 2);
    const int want = oracle::chromatic_weighted(g);
    int i = 0;
    for (const auto& m : recognize(g)) {
      if (m.member) {
        const auto r = run_pipeline(m.label, g);
        check_result(g, r, want);
        ++covered[i];
      }
      ++i;
    }
  }
  for (int c : covered) CHECK(c > 100);
}

TEST_CASE("forkbull P5 steps are traced and replayable") {
  // Prime (fork, bull)-free graph with an induced P5 and no long hole.
  Rng rng(9);
  int steps = 0;
  for (int t = 0; t < 400 && steps == 0; ++t) {
    const auto g = testing_support::random_graph(rng, 8, 0.6, 3);
    if (!recognize(g)[3].member || !find_p5(g)) continue;
    const auto a = forkbull_wvc(g);
    const auto b = forkbull_wvc(g);
    CHECK(a.trace == b.trace);
    CHECK(a.coloring.classes == b.coloring.classes);
    check_result(g, a, oracle::chromatic_weighted(g));
    steps += a.trace.decrement_steps;
  }
  CHECK(steps > 0);
}

TEST_CASE("P5 context") {
  const auto p5 = make_path(5);
  const Embedding path{0, 1, 2, 3, 4};
  const auto bare = build_p5_context(p5, path);
  for (unsigned m = 0; m < 32; ++m) CHECK(bare.s(m).empty());
  for (int i = 0; i < 5; ++i) CHECK(bare.v[i] == VertexSet{i});
  CHECK(bare.a_prime.empty());
  CHECK(bare.f.empty());
  CHECK_FALSE(verify_p5_context(p5, bare));

  const auto s12 = with_extra_vertex(p5, {0, 1});
  const auto ctx = build_p5_context(s12, path);
  CHECK(ctx.s(p5_class_mask("12")) == VertexSet{5});
  CHECK(ctx.v[0] == VertexSet{0, 5});

  CHECK_THROWS_AS(build_p5_context(with_extra_vertex(p5, {1, 2}), path), StructureViolation);
  CHECK(p5_class_allowed(p5_class_mask("135")));
  CHECK_FALSE(p5_class_allowed(p5_class_mask("23")));
}
