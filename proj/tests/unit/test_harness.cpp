#include <doctest.h>

#include <filesystem>

#include "support/oracles.hpp"
#include "wvc/harness.hpp"
#include "wvc/io.hpp"

using namespace wvc;

namespace {

WeightedGraph with_extra_vertex(const WeightedGraph& g, const std::vector<Vertex>& neighbours) {
  auto edges = g.edges();
  for (Vertex v : neighbours) edges.emplace_back(v, g.size());
  return WeightedGraph::build(g.size() + 1, edges);
}

}  // namespace

TEST_CASE("rng is reproducible and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.between(3, 9);
    CHECK(x == b.between(3, 9));
    CHECK(x >= 3);
    CHECK(x <= 9);
    const double u = a.unit();
    CHECK(u == b.unit());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
}

TEST_CASE("generate examples") {
  GenSpec full;
  full.n = 5;
  full.p = 1.0;
  CHECK(*generate(full) == make_complete(5));
  GenSpec none;
  none.n = 5;
  none.p = 0.0;
  CHECK(*generate(none) == make_edgeless(5));
  GenSpec fb;
  fb.n = 8;
  fb.p = 0.4;
  fb.seed = 7;
  fb.filter = forbidden_patterns(ClassLabel::forkbull);
  const auto g = generate(fb);
  REQUIRE(g);
  CHECK(is_free(*g, fb.filter).free);
  CHECK(*generate(fb) == *g);
  GenSpec hard;
  hard.n = 60;
  hard.max_attempts = 1;
  hard.filter = forbidden_patterns(ClassLabel::p5dart);
  CHECK_FALSE(generate(hard));
}

TEST_CASE("grow mode respects the filter and primality") {
  for (const auto& id : check_ids()) {
    GenSpec spec = tuned_spec(id);
    for (std::uint64_t s = 0; s < 5; ++s) {
      spec.seed = s;
      const auto g = generate(spec);
      if (!g) continue;
      CHECK(is_free(*g, spec.filter).free);
      if (spec.require_prime) CHECK(oracle::is_prime(*g));
      CHECK(g->size() <= spec.n);
      for (Vertex v = 0; v < g->size(); ++v) CHECK(g->weight(v) <= spec.max_weight);
    }
  }
}

TEST_CASE("c5 partition") {
  const auto c5 = make_cycle(5);
  const HoleWitness cycle{{0, 1, 2, 3, 4}};
  const auto bare = c5_partition(c5, cycle);
  CHECK(bare.t.empty());
  CHECK(bare.r.empty());
  CHECK(bare.overflow.empty());
  for (int i = 0; i < 5; ++i) {
    CHECK(bare.w[i].empty());
    CHECK(bare.x[i].empty());
  }
  CHECK(c5_partition(with_extra_vertex(c5, {0, 1, 2, 3, 4}), cycle).t == VertexSet{5});
  CHECK(c5_partition(with_extra_vertex(c5, {4, 1}), cycle).w[0] == VertexSet{5});
  CHECK(c5_partition(with_extra_vertex(c5, {4, 0, 1}), cycle).x[0] == VertexSet{5});
  CHECK(c5_partition(with_extra_vertex(c5, {0, 1, 3}), cycle).y[0] == VertexSet{5});
  CHECK(c5_partition(with_extra_vertex(c5, {1, 2, 3, 4}), cycle).z[0] == VertexSet{5});
  CHECK(c5_partition(with_extra_vertex(c5, {}), cycle).r == VertexSet{5});
  CHECK(c5_partition(with_extra_vertex(c5, {0}), cycle).overflow == VertexSet{5});
}

TEST_CASE("check examples") {
  CHECK(check_structure("long-odd-hole-triangle-free", make_cycle(5)).verdict == Verdict::vacuous);
  CHECK(check_structure("forkbull-long-hole", make_cycle(7)).verdict == Verdict::pass);
  CHECK(check_structure("forkbull-p5-class", make_path(5)).verdict == Verdict::pass);
  CHECK(check_structure("differential", make_cycle(5)).verdict == Verdict::pass);
  CHECK(check_structure("c5-classified", make_path(4)).verdict == Verdict::vacuous);
  CHECK(check_structure("c5-classified", make_cycle(5)).verdict == Verdict::pass);
  CHECK_FALSE(is_check_id("nope"));
  CHECK(check_ids().size() == 14);
}

TEST_CASE("no check passes on hypothesis failure") {
  // The bull contains itself, so every check whose class excludes bulls
  // must be vacuous on a bull-containing graph.
  const auto bull = Pattern::bull().graph();
  for (const char* id : {"house-bull-p5c5-free-or-triangle-free", "forkbull-long-hole", "forkbull-p5-class",
                         "bull-hole-neighborhood"}) {
    CHECK(check_structure(id, bull).verdict == Verdict::vacuous);
  }
}

TEST_CASE("campaigns") {
  const std::vector<std::string> none;
  const auto empty = campaign(GenSpec{}, none, 0);
  CHECK(empty.trials == 0);
  CHECK(empty.tallies.empty());
  const std::vector<std::string> ids{"forkbull-long-hole", "forkbull-p5-class", "differential"};
  GenSpec spec;
  spec.n = 9;
  spec.filter = forbidden_patterns(ClassLabel::forkbull);
  const auto a = campaign(spec, ids, 40);
  const auto b = campaign(spec, ids, 40);
  CHECK(a.failures() == 0);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.tallies.size() == 3);
  for (const auto& t : a.tallies) CHECK(t.trials() == 40);
}

TEST_CASE("failures are written as replayable graphs") {
  // Any FAIL would land in this directory; a clean campaign writes nothing.
  const auto dir = std::filesystem::temp_directory_path() / "wvc-unit-campaign";
  std::filesystem::remove_all(dir);
  CampaignOptions options;
  options.out_dir = dir;
  const std::vector<std::string> ids{"differential"};
  const auto r = campaign(tuned_spec("differential"), ids, 20, options);
  CHECK(r.failures() == 0);
  CHECK_FALSE(std::filesystem::exists(dir));
}
