#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wvc {

using Vertex = int;
using Weight = std::int64_t;
// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

struct InducedSubgraph;

// Undirected simple graph on vertices 0..n-1 with positive integer weights.
// Adjacency is a dense symmetric bit matrix; values are immutable once built.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Throws InputError naming the offending entry on out-of-range
  // endpoints, self-loops, nonpositive weights or a weight vector whose
  // length differs from n. An empty weight vector means unit weights.
  static WeightedGraph build(int n, std::span<const Edge> edges,
                             std::span<const Weight> weights = {});
  static WeightedGraph build(int n, std::initializer_list<Edge> edges,
                             std::initializer_list<Weight> weights = {});

  int size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  Weight weight(Vertex v) const noexcept { return weights_[v]; }
  std::span<const Weight> weights() const noexcept { return weights_; }
  Weight total_weight() const noexcept;

  std::vector<Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int edge_count() const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  WeightedGraph complement() const;
  InducedSubgraph induced(std::span<const Vertex> vertices) const;
  WeightedGraph with_weights(std::span<const Weight> weights) const;
  WeightedGraph with_unit_weights() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  explicit WeightedGraph(int n);
  void set_edge(Vertex u, Vertex v);

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<Weight> weights_;
};

// G[S] together with the map from its vertex indices back to the parent.
struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<Vertex> to_parent;
};

// A multiset of stable sets; vertex v must appear in at least w(v) of them.
struct WeightedColoring {
  std::vector<VertexSet> classes;

  int class_count() const noexcept { return static_cast<int>(classes.size()); }
};

bool is_stable(const WeightedGraph& g, std::span<const Vertex> s);
bool is_clique(const WeightedGraph& g, std::span<const Vertex> s);

// Connected components, each sorted, ordered by least vertex.
std::vector<VertexSet> components(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};

// Either a 2-coloring (least vertex of each component on side A) or an
// odd cycle witness in cyclic order.
struct BipartitionResult {
  std::optional<Bipartition> sides;
  std::vector<Vertex> odd_cycle;
};

BipartitionResult bipartition(const WeightedGraph& g);

struct BlowUp {
  WeightedGraph graph;
  std::vector<Vertex> original;  // copy index -> vertex of the source graph
};

// Replaces v by a clique of multiplicity[v] unit-weight copies; copies of
// adjacent vertices are fully adjacent. An empty span uses the weights.
BlowUp blow_up(const WeightedGraph& g, std::span<const Weight> multiplicity = {});

struct WeightedClique {
  VertexSet vertices;
  Weight weight = 0;
};

// Exact maximum-weight clique by branch and bound with greedy colouring
// bounds. Exponential in the worst case.
WeightedClique max_weight_clique(const WeightedGraph& g);

struct ColoringVerdict {
  bool valid = false;
  std::string reason;  // names the offending class or vertex when invalid
};

ColoringVerdict validate_coloring(const WeightedGraph& g, const WeightedColoring& c);

// Number of classes of `c` that contain v, for every vertex.
std::vector<Weight> coverage(const WeightedGraph& g, const WeightedColoring& c);

// Maps each class through `to_parent` and sorts it.
WeightedColoring lift_coloring(const WeightedColoring& c, std::span<const Vertex> to_parent);

// Builds a cycle v0-v1-...-v(n-1)-v0, a path, a complete or edgeless graph.
WeightedGraph make_cycle(int n, std::span<const Weight> weights = {});
WeightedGraph make_path(int n, std::span<const Weight> weights = {});
WeightedGraph make_complete(int n, std::span<const Weight> weights = {});
WeightedGraph make_edgeless(int n, std::span<const Weight> weights = {});

std::string to_string(std::span<const Vertex> s);

}  // namespace wvc
