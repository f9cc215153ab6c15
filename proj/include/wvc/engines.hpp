#pragma once

#include <cstdint>
#include <vector>

#include "wvc/graph.hpp"
#include "wvc/patterns.hpp"

namespace wvc {

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
};

struct SearchResult {
  WeightedColoring coloring;
  Weight root_lower_bound = 0;  // weighted clique / stable-set bound at the root
  Weight greedy_upper_bound = 0;
  std::uint64_t nodes = 0;
};

// Exact weighted colouring by branch and bound over maximal stable sets
// containing the least-index vertex of positive residual weight, memoised
// on the residual weight vector. Supports at most 64 vertices. Throws
// BudgetExceeded instead of ever returning a non-optimal answer.
SearchResult branch_and_bound_wvc(const WeightedGraph& g, const SearchOptions& options = {});

WeightedColoring oracle_wvc(const WeightedGraph& g, const SearchOptions& options = {});
// Same search, closing immediately when the greedy colouring meets the
// weighted clique bound (always the case at the root on perfect inputs
// for which the greedy order is good, and quickly otherwise).
WeightedColoring perfect_wvc(const WeightedGraph& g, const SearchOptions& options = {});

// Sequential greedy multicolouring: each vertex in index order takes the
// w(v) smallest colours unused by its earlier neighbours.
WeightedColoring greedy_wvc(const WeightedGraph& g);

using Matching = std::vector<Edge>;

// Maximum-cardinality matching in a general graph (Edmonds' blossom
// algorithm). Edges are reported as (u, v) with u < v, sorted.
Matching blossom_max_matching(const WeightedGraph& g);

// Triad-free graphs: classes are stable pairs from a maximum b-matching
// of the complement plus singletons. Throws PreconditionError with a
// triad witness otherwise.
WeightedColoring triadfree_wvc(const WeightedGraph& g);

// Bipartite graphs: chi_w = max(max edge weight sum, max weight). Throws
// PreconditionError with an odd cycle witness otherwise.
WeightedColoring bipartite_wvc(const WeightedGraph& g);

// Cycle of cliques A_1..A_l; sizes[i] = |A_{i+1}|.
struct Hyperhole {
  std::vector<Weight> sizes;

  int length() const noexcept { return static_cast<int>(sizes.size()); }
  Weight vertex_count() const noexcept;
  Weight clique_number() const noexcept;
  // max{omega, ceil(2N / (l - 1))} for odd l >= 5.
  Weight chromatic_number() const;
};

// Colouring of an odd hyperhole (l >= 5) expressed on the weighted cycle
// C_l: every class is a stable set of positions, position i is covered
// sizes[i] times, and the class count equals chromatic_number().
WeightedColoring hyperhole_wvc(const Hyperhole& h);

// g must be exactly the hole given by `hole` (covering all of V(g)).
// Odd length uses hyperhole_wvc, even length bipartite_wvc.
WeightedColoring weighted_hole_wvc(const WeightedGraph& g, const HoleWitness& hole);

}  // namespace wvc
