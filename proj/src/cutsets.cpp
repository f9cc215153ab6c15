#include <algorithm>
#include <limits>

#include "wvc/decomp.hpp"
#include "wvc/errors.hpp"

namespace wvc {

namespace {

// MCS-M minimal elimination ordering. `madj[x]` lists the neighbours of x
// in the minimal triangulation numbered before x; for every generator x,
// madj[x] is a minimal separator of the triangulation, and the clique
// minimal separators of g are exactly those that are cliques in g.
struct MinimalTriangulation {
  std::vector<Vertex> generators;
  std::vector<VertexSet> madj;
};

MinimalTriangulation mcs_m(const WeightedGraph& g) {
  const int n = g.size();
  std::vector<int> label(n, 0), number(n, -1);
  MinimalTriangulation out;
  out.madj.resize(n);
  int previous = -1;
  constexpr int kUnreached = std::numeric_limits<int>::max();
  for (int i = n - 1; i >= 0; --i) {
    Vertex x = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (number[v] < 0 && (x < 0 || label[v] > label[x])) x = v;
    }
    if (label[x] <= previous) out.generators.push_back(x);
    previous = label[x];

    // Minimax path search: cost[y] is the least possible maximum label of
    // the interior of an unnumbered x-y path (-1 for a direct edge).
    std::vector<int> cost(n, kUnreached);
    std::vector<bool> done(n, false);
    for (Vertex y = 0; y < n; ++y) {
      if (y != x && number[y] < 0 && g.adjacent(x, y)) cost[y] = -1;
    }
    done[x] = true;
    while (true) {
      Vertex z = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (!done[v] && number[v] < 0 && cost[v] != kUnreached && (z < 0 || cost[v] < cost[z])) z = v;
      }
      if (z < 0) break;
      done[z] = true;
      const int through = std::max(cost[z], label[z]);
      for (Vertex y = 0; y < n; ++y) {
        if (!done[y] && number[y] < 0 && g.adjacent(z, y) && through < cost[y]) cost[y] = through;
      }
    }
    number[x] = i;
    std::vector<Vertex> reached;
    for (Vertex y = 0; y < n; ++y) {
      if (y != x && number[y] < 0 && cost[y] < label[y]) reached.push_back(y);
    }
    for (Vertex y : reached) {
      ++label[y];
      out.madj[y].push_back(x);
    }
  }
  for (auto& s : out.madj) std::sort(s.begin(), s.end());
  return out;
}

std::vector<VertexSet> components_without(const WeightedGraph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.size(), false);
  for (Vertex v : removed) gone[v] = true;
  VertexSet rest;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!gone[v]) rest.push_back(v);
  }
  const auto sub = g.induced(rest);
  auto parts = components(sub.graph);
  for (auto& part : parts) {
    for (auto& v : part) v = sub.to_parent[v];
  }
  return parts;
}

}  // namespace

std::optional<CliqueCutset> find_clique_cutset(const WeightedGraph& g) {
  if (g.size() < 3) return std::nullopt;
  const auto tri = mcs_m(g);
  std::optional<CliqueCutset> best;
  for (Vertex x : tri.generators) {
    const VertexSet& s = tri.madj[x];
    if (!is_clique(g, s)) continue;
    if (best && !(s < best->clique)) continue;
    auto parts = components_without(g, s);
    if (parts.size() < 2) continue;
    best = CliqueCutset{s, std::move(parts)};
  }
  return best;
}

std::vector<VertexSet> CBlockTree::blocks() const {
  std::vector<VertexSet> out;
  for (const auto& node : nodes) {
    if (node.is_block()) out.push_back(node.vertices);
  }
  return out;
}

std::vector<VertexSet> CBlockTree::separators() const {
  std::vector<VertexSet> out;
  for (const auto& node : nodes) {
    if (!node.is_block()) out.push_back(node.separator);
  }
  return out;
}

namespace {

int build_cblocks(const WeightedGraph& g, const VertexSet& vertices, CBlockTree& tree) {
  const int id = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({vertices, {}, {}});
  const auto sub = g.induced(vertices);
  auto cut = find_clique_cutset(sub.graph);
  if (!cut) return id;
  VertexSet separator;
  for (Vertex v : cut->clique) separator.push_back(sub.to_parent[v]);
  tree.nodes[id].separator = separator;
  std::vector<int> children;
  for (const auto& part : cut->parts) {
    VertexSet piece = separator;
    for (Vertex v : part) piece.push_back(sub.to_parent[v]);
    std::sort(piece.begin(), piece.end());
    children.push_back(build_cblocks(g, piece, tree));
  }
  tree.nodes[id].children = std::move(children);
  return id;
}

WeightedColoring color_cblock(const WeightedGraph& g, const CBlockTree& tree, int id,
                              const ColoringSolver& solver) {
  const auto& node = tree.nodes[id];
  if (node.is_block()) {
    const auto sub = g.induced(node.vertices);
    return lift_coloring(solver(sub.graph), sub.to_parent);
  }
  std::vector<WeightedColoring> pieces;
  std::size_t width = 0;
  for (int child : node.children) {
    pieces.push_back(color_cblock(g, tree, child, solver));
    width = std::max(width, pieces.back().classes.size());
  }
  const VertexSet& q = node.separator;
  std::vector<bool> in_q(g.size(), false);
  for (Vertex v : q) in_q[v] = true;

  // Trim every separator vertex to exactly w(v) classes; then class index
  // lists per separator vertex are disjoint (Q is a clique).
  auto trim = [&](WeightedColoring& c) {
    std::vector<Weight> seen(g.size(), 0);
    for (auto& cls : c.classes) {
      std::erase_if(cls, [&](Vertex v) { return in_q[v] && ++seen[v] > g.weight(v); });
    }
  };
  auto slots_of = [&](const WeightedColoring& c) {
    std::vector<std::vector<std::size_t>> slots(g.size());
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
      for (Vertex v : c.classes[i]) {
        if (in_q[v]) slots[v].push_back(i);
      }
    }
    return slots;
  };

  WeightedColoring out;
  out.classes.resize(width);
  std::vector<std::vector<std::size_t>> anchor;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    auto& piece = pieces[p];
    trim(piece);
    piece.classes.resize(width);
    const auto slots = slots_of(piece);
    if (p == 0) anchor = slots;
    // target[i]: output slot for class i of this piece.
    std::vector<std::size_t> target(width, width);
    std::vector<bool> taken(width, false);
    for (Vertex v : q) {
      for (std::size_t t = 0; t < slots[v].size(); ++t) {
        target[slots[v][t]] = anchor[v][t];
        taken[anchor[v][t]] = true;
      }
    }
    std::size_t free_slot = 0;
    for (std::size_t i = 0; i < width; ++i) {
      if (target[i] != width) continue;
      while (taken[free_slot]) ++free_slot;
      target[i] = free_slot;
      taken[free_slot] = true;
    }
    for (std::size_t i = 0; i < width; ++i) {
      auto& dst = out.classes[target[i]];
      for (Vertex v : piece.classes[i]) {
        if (p == 0 || !in_q[v]) dst.push_back(v);
      }
    }
  }
  for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
  return out;
}

}  // namespace

CBlockTree cblock_decompose(const WeightedGraph& g) {
  CBlockTree tree;
  if (g.empty()) return tree;
  VertexSet all(g.size());
  for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
  tree.root = build_cblocks(g, all, tree);
  return tree;
}

WeightedColoring wvc_by_cblocks(const WeightedGraph& g, const ColoringSolver& block_solver) {
  if (g.empty()) return {};
  const auto comps = components(g);
  if (comps.size() > 1) {
    // Disconnected input: colour each component and merge index-wise.
    WeightedColoring out;
    for (const auto& comp : comps) {
      const auto sub = g.induced(comp);
      auto part = lift_coloring(wvc_by_cblocks(sub.graph, block_solver), sub.to_parent);
      if (part.classes.size() > out.classes.size()) out.classes.resize(part.classes.size());
      for (std::size_t i = 0; i < part.classes.size(); ++i) {
        auto& cls = out.classes[i];
        cls.insert(cls.end(), part.classes[i].begin(), part.classes[i].end());
        std::sort(cls.begin(), cls.end());
      }
    }
    return out;
  }
  const auto tree = cblock_decompose(g);
  return color_cblock(g, tree, tree.root, block_solver);
}

}  // namespace wvc
