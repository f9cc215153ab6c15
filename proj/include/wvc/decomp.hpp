#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wvc/graph.hpp"

namespace wvc {

enum class ModuleKind { leaf, series, parallel, prime };

std::string to_string(ModuleKind kind);

struct ModuleNode {
  ModuleKind kind = ModuleKind::leaf;
  VertexSet vertices;         // the strong module, sorted
  std::vector<int> children;  // node indices, ordered by least vertex
  // Quotient on the children (unit weights); child i is quotient vertex i.
  WeightedGraph quotient;
};

// Strong-module tree. Nodes are stored in a flat vector; `root` is -1 only
// for the empty graph.
struct ModuleTree {
  std::vector<ModuleNode> nodes;
  int root = -1;

  const ModuleNode& root_node() const { return nodes.at(root); }
};

ModuleTree modular_decompose(const WeightedGraph& g);

// The smallest homogeneous set of g containing all of `seed`.
VertexSet module_closure(const WeightedGraph& g, std::span<const Vertex> seed);
bool is_homogeneous(const WeightedGraph& g, std::span<const Vertex> s);
bool is_prime(const WeightedGraph& g);

using ColoringSolver = std::function<WeightedColoring(const WeightedGraph&)>;

// Optimal weighted colouring through the module tree. `prime_solver` is
// called on the weighted quotient of every prime node, where quotient
// vertex i carries the weighted chromatic number of child i.
WeightedColoring wvc_by_modules(const WeightedGraph& g, const ColoringSolver& prime_solver);

struct CliqueCutset {
  VertexSet clique;
  std::vector<VertexSet> parts;  // components of G - clique
};

// A clique cutset of the connected graph g, or nothing. Candidates are the
// clique minimal separators; the lexicographically least one is returned.
std::optional<CliqueCutset> find_clique_cutset(const WeightedGraph& g);

struct CBlockNode {
  VertexSet vertices;
  VertexSet separator;        // empty for a block (leaf)
  std::vector<int> children;  // one per component of G[vertices] - separator

  bool is_block() const noexcept { return children.empty(); }
};

struct CBlockTree {
  std::vector<CBlockNode> nodes;
  int root = -1;

  std::vector<VertexSet> blocks() const;
  std::vector<VertexSet> separators() const;
};

CBlockTree cblock_decompose(const WeightedGraph& g);

// Optimal weighted colouring through clique-cutset decomposition;
// `block_solver` sees the induced subgraph of every block.
WeightedColoring wvc_by_cblocks(const WeightedGraph& g, const ColoringSolver& block_solver);

}  // namespace wvc
