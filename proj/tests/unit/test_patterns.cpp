#include <doctest.h>

#include "support/oracles.hpp"
#include "support/random_graphs.hpp"
#include "wvc/patterns.hpp"

using namespace wvc;

namespace {

WeightedGraph with_extra_vertex(const WeightedGraph& g, const std::vector<Vertex>& neighbours) {
  auto edges = g.edges();
  for (Vertex v : neighbours) edges.emplace_back(v, g.size());
  return WeightedGraph::build(g.size() + 1, edges);
}

}  // namespace

TEST_CASE("catalog shapes") {
  CHECK(Pattern::dart().graph().edge_count() == 6);
  CHECK(Pattern::banner().graph().edge_count() == 5);
  CHECK(Pattern::bull().graph().edge_count() == 5);
  CHECK(Pattern::fork().graph().edge_count() == 4);
  CHECK(Pattern::house().graph().edge_count() == 6);
  CHECK(Pattern::house().graph() == make_path(5).complement());
  CHECK(Pattern::hammer().graph() == Pattern::banner().graph().complement());
  CHECK(Pattern::co_dart().graph() == Pattern::dart().graph().complement());
  CHECK(oracle::induced_embedding(Pattern::bull().graph().complement(), Pattern::bull().graph()));
  CHECK(Pattern::by_name("p5").graph() == make_path(5));
  CHECK(Pattern::by_name("Co-Dart").name() == Pattern::co_dart().name());
}

TEST_CASE("find_induced examples") {
  const auto dart = Pattern::dart();
  const auto self = find_induced(dart.graph(), dart);
  REQUIRE(self);
  CHECK(*self == Embedding{0, 1, 2, 3, 4});
  CHECK_FALSE(find_induced(make_cycle(5), Pattern::bull()));
  const auto p5 = find_induced(make_cycle(6), Pattern::path(5));
  REQUIRE(p5);
  CHECK(make_cycle(6).induced(*p5).graph.edge_count() == 4);
  CHECK(is_free(make_cycle(5), std::vector<Pattern>{Pattern::path(5), Pattern::dart()}).free);
  const auto p = is_free(make_path(5), std::vector<Pattern>{Pattern::path(5)});
  CHECK_FALSE(p.free);
  CHECK(p.witness == Embedding{0, 1, 2, 3, 4});
  CHECK(is_free(make_complete(5), std::vector<Pattern>{Pattern::fork(), Pattern::bull()}).free);
}

TEST_CASE("find_induced agrees with tuple enumeration on random graphs") {
  Rng rng(21);
  const auto catalog = Pattern::catalog();
  for (int t = 0; t < 150; ++t) {
    const auto g = testing_support::random_graph(rng, static_cast<int>(rng.between(0, 8)), 0.5);
    for (const auto& p : catalog) {
      const auto got = find_induced(g, p);
      const auto want = oracle::induced_embedding(g, p.graph());
      REQUIRE(got.has_value() == want.has_value());
      if (got) CHECK(*got == *want);
      for (Vertex v = 0; v < g.size(); v += 3) {
        const auto through = find_induced_through(g, p, v);
        if (through) {
          CHECK(std::find(through->begin(), through->end(), v) != through->end());
          CHECK(oracle::induced_embedding(g.induced(*through).graph, p.graph()));
        }
      }
    }
  }
}

TEST_CASE("triangles and triads") {
  CHECK_FALSE(has_triangle(make_cycle(5)));
  CHECK_FALSE(has_triad(make_cycle(5)));
  const auto triad = find_triad(make_cycle(6));
  REQUIRE(triad);
  CHECK(is_stable(make_cycle(6), *triad));
  CHECK(has_triangle(make_complete(3)));
}

TEST_CASE("holes") {
  const auto c6 = find_hole_at_least(make_cycle(6));
  REQUIRE(c6);
  CHECK(c6->length() == 6);
  CHECK_FALSE(find_hole_at_least(make_cycle(5)));
  const auto c7 = find_hole_at_least(make_cycle(7));
  REQUIRE(c7);
  CHECK(c7->length() == 7);
  CHECK(is_induced_cycle(make_cycle(7), c7->vertices));

  const auto c5 = find_c5(make_cycle(5));
  REQUIRE(c5);
  CHECK(c5->length() == 5);
  const auto star = WeightedGraph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK_FALSE(find_p5(star));
  CHECK_FALSE(find_c5(star));
  CHECK(find_p5(make_cycle(6)));
  CHECK_FALSE(find_c5(make_cycle(6)));
}

TEST_CASE("hole detection agrees with subset enumeration") {
  Rng rng(33);
  for (int t = 0; t < 400; ++t) {
    const auto g = testing_support::random_graph(rng, static_cast<int>(rng.between(0, 9)), rng.unit());
    const auto hole = find_hole_at_least(g, 6);
    CHECK(hole.has_value() == oracle::has_hole_at_least(g, 6));
    if (hole) {
      CHECK(hole->length() >= 6);
      CHECK(is_induced_cycle(g, hole->vertices));
    }
    const auto odd = find_odd_hole(g, 9);
    if (odd) {
      CHECK(odd->length() % 2 == 1);
      CHECK(is_induced_cycle(g, odd->vertices));
    }
  }
}

TEST_CASE("odd holes and antiholes") {
  CHECK(find_odd_hole(make_cycle(7))->length() == 7);
  CHECK_FALSE(find_odd_hole(make_cycle(6)));
  CHECK(find_odd_antihole(make_cycle(7).complement())->length() == 7);
  CHECK_FALSE(find_odd_antihole(make_cycle(5)));
  CHECK(find_odd_hole_between(make_cycle(9), 7, 9)->length() == 9);
  CHECK_FALSE(find_odd_hole_between(make_cycle(5), 7, 9));
}

TEST_CASE("hole neighbourhood classes") {
  const auto c6 = make_cycle(6);
  const HoleWitness b{{0, 1, 2, 3, 4, 5}};
  const auto wheel = with_extra_vertex(c6, {0, 1, 2, 3, 4, 5});
  CHECK(hole_neighborhood_class(wheel, b, 6).kind == HoleNeighborhood::full);
  const auto pendant = with_extra_vertex(c6, {0});
  CHECK(hole_neighborhood_class(pendant, b, 6).kind == HoleNeighborhood::stable);
  const auto triple = with_extra_vertex(c6, {5, 0, 1});
  const auto cls = hole_neighborhood_class(triple, b, 6);
  CHECK(cls.kind == HoleNeighborhood::consecutive_triple);
  CHECK(cls.index == 0);
  const auto pair = with_extra_vertex(c6, {0, 1});
  CHECK(hole_neighborhood_class(pair, b, 6).kind == HoleNeighborhood::other);
}
