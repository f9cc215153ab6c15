#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wvc/graph.hpp"

namespace wvc {

// A fixed small graph from the forbidden-subgraph catalog. Vertex order is
// part of the definition: embeddings are reported in that order.
class Pattern {
 public:
  static Pattern path(int k);      // P_k, k <= 6, vertices in path order
  static Pattern cycle(int k);     // C_k, 3 <= k <= 7, vertices in cyclic order
  static Pattern complete(int k);  // K_k, k <= 5
  static Pattern edgeless(int k);  // O_k, k <= 4
  static Pattern dart();    // diamond {0,1,2,3} minus 1-3, pendant 4 at 0
  static Pattern banner();  // C4 0-1-2-3, pendant 4 at 0
  static Pattern bull();    // triangle 0,1,2, pendants 3 at 0 and 4 at 1
  static Pattern fork();    // claw centred at 0 with leaves 1,2,3; 3-4
  static Pattern house();   // complement of P5
  static Pattern hammer();  // complement of banner
  static Pattern co_dart(); // complement of dart
  static Pattern gem();     // P4 0-1-2-3 plus 4 adjacent to all

  // Accepts "P5", "C5", "K3", "O3", "dart", "co-dart", ... (case-insensitive).
  static Pattern by_name(std::string_view name);
  static std::vector<Pattern> catalog();

  const std::string& name() const noexcept { return name_; }
  int size() const noexcept { return graph_.size(); }
  const WeightedGraph& graph() const noexcept { return graph_; }

 private:
  Pattern(std::string name, WeightedGraph g) : name_(std::move(name)), graph_(std::move(g)) {}

  std::string name_;
  WeightedGraph graph_;
};

// Ordered tuple: entry i is the image of pattern vertex i.
using Embedding = std::vector<Vertex>;

// Lexicographically least induced embedding of p in g.
std::optional<Embedding> find_induced(const WeightedGraph& g, const Pattern& p);
// Lexicographically least induced embedding whose image contains v.
std::optional<Embedding> find_induced_through(const WeightedGraph& g, const Pattern& p,
                                              Vertex v);

struct FreenessResult {
  bool free = true;
  std::string pattern;   // first pattern found, when not free
  Embedding witness;
};

FreenessResult is_free(const WeightedGraph& g, std::span<const Pattern> patterns);

std::optional<std::vector<Vertex>> find_triangle(const WeightedGraph& g);
std::optional<std::vector<Vertex>> find_triad(const WeightedGraph& g);
inline bool has_triangle(const WeightedGraph& g) { return find_triangle(g).has_value(); }
inline bool has_triad(const WeightedGraph& g) { return find_triad(g).has_value(); }

// Induced cycle, vertices in cyclic order.
struct HoleWitness {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
};

bool is_induced_cycle(const WeightedGraph& g, std::span<const Vertex> cyclic_order);

// Some hole of length >= min_length (only 6 is supported), or nothing.
std::optional<HoleWitness> find_hole_at_least(const WeightedGraph& g, int min_length = 6);
std::optional<HoleWitness> find_c5(const WeightedGraph& g);
std::optional<Embedding> find_p5(const WeightedGraph& g);

// Bounded exhaustive search for an odd hole (length 5..max_length) in g.
// Returns nothing if none exists within the bound; throws BudgetExceeded
// when more than `node_budget` partial paths are explored.
std::optional<HoleWitness> find_odd_hole(const WeightedGraph& g, int max_length = 9,
                                         std::uint64_t node_budget = 5'000'000);
// Same for odd antiholes (odd holes of the complement), length >= 7 by
// default since C5 is self-complementary.
std::optional<HoleWitness> find_odd_antihole(const WeightedGraph& g, int max_length = 9,
                                             std::uint64_t node_budget = 5'000'000);
// Longer holes only.
std::optional<HoleWitness> find_odd_hole_between(const WeightedGraph& g, int min_length,
                                                 int max_length,
                                                 std::uint64_t node_budget = 5'000'000);

enum class HoleNeighborhood { stable, full, consecutive_triple, triple_plus, other };

struct HoleNeighborhoodClass {
  HoleNeighborhood kind = HoleNeighborhood::other;
  int index = -1;  // position i (0-based) of the middle vertex for the triple forms
};

// Classifies N_B(x) for a hole B of length >= 6 and x outside B.
HoleNeighborhoodClass hole_neighborhood_class(const WeightedGraph& g, const HoleWitness& b,
                                              Vertex x);

std::string to_string(HoleNeighborhood kind);

}  // namespace wvc
