#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wvc/graph.hpp"

// Independent brute-force references. They use only size(), adjacent()
// and weight() of the graph under test.
namespace oracle {

using wvc::Vertex;
using wvc::WeightedGraph;

// Minimum k such that the blow-up of g is k-colourable.
int chromatic_weighted(const WeightedGraph& g);

// Lexicographically least ordered tuple realising h as an induced
// subgraph of g.
std::optional<std::vector<Vertex>> induced_embedding(const WeightedGraph& g, const WeightedGraph& h);

// Vertex subsets (bitmask) that induce a cycle of length >= min_length.
bool has_hole_at_least(const WeightedGraph& g, int min_length);
bool induces_cycle(const WeightedGraph& g, std::uint64_t mask);

int max_matching_size(const WeightedGraph& g);

bool is_module(const WeightedGraph& g, std::uint64_t mask);
bool is_prime(const WeightedGraph& g);
bool is_clique(const WeightedGraph& g, std::uint64_t mask);
bool is_stable(const WeightedGraph& g, std::uint64_t mask);
int components_without(const WeightedGraph& g, std::uint64_t removed);
bool has_clique_cutset(const WeightedGraph& g);
std::int64_t max_weight_clique(const WeightedGraph& g);

std::uint64_t mask_of(const std::vector<Vertex>& vs);

}  // namespace oracle
