#include <algorithm>

#include "wvc/decomp.hpp"
#include "wvc/errors.hpp"

namespace wvc {

std::string to_string(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::leaf: return "leaf";
    case ModuleKind::series: return "series";
    case ModuleKind::parallel: return "parallel";
    case ModuleKind::prime: return "prime";
  }
  return "leaf";
}

VertexSet module_closure(const WeightedGraph& g, std::span<const Vertex> seed) {
  const int n = g.size();
  std::vector<bool> in(n, false);
  std::vector<int> hits(n, 0);  // neighbours inside the current set
  int size = 0;
  auto add = [&](Vertex v) {
    in[v] = true;
    ++size;
    for (Vertex u = 0; u < n; ++u) {
      if (g.adjacent(u, v)) ++hits[u];
    }
  };
  for (Vertex v : seed) {
    if (!in[v]) add(v);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex z = 0; z < n; ++z) {
      if (!in[z] && hits[z] > 0 && hits[z] < size) {
        add(z);
        grew = true;
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

bool is_homogeneous(const WeightedGraph& g, std::span<const Vertex> s) {
  std::vector<bool> in(g.size(), false);
  for (Vertex v : s) in[v] = true;
  for (Vertex z = 0; z < g.size(); ++z) {
    if (in[z]) continue;
    std::size_t hits = 0;
    for (Vertex v : s) hits += g.adjacent(z, v);
    if (hits != 0 && hits != s.size()) return false;
  }
  return true;
}

namespace {

class ModuleTreeBuilder {
 public:
  explicit ModuleTreeBuilder(const WeightedGraph& g) : g_(g) {}

  ModuleTree run() {
    if (g_.size() > 0) {
      VertexSet all(g_.size());
      for (Vertex v = 0; v < g_.size(); ++v) all[v] = v;
      tree_.root = build(all);
    }
    return std::move(tree_);
  }

 private:
  int build(const VertexSet& s) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back({});
    tree_.nodes[id].vertices = s;
    if (s.size() == 1) return id;

    const auto sub = g_.induced(s);
    std::vector<VertexSet> parts;
    ModuleKind kind;
    if (auto comps = components(sub.graph); comps.size() > 1) {
      kind = ModuleKind::parallel;
      parts = std::move(comps);
    } else if (auto cocomps = components(sub.graph.complement()); cocomps.size() > 1) {
      kind = ModuleKind::series;
      parts = std::move(cocomps);
    } else {
      kind = ModuleKind::prime;
      parts = maximal_proper_modules(sub.graph);
    }
    for (auto& part : parts) {
      for (auto& v : part) v = sub.to_parent[v];
    }
    std::sort(parts.begin(), parts.end());

    std::vector<Vertex> representatives;
    std::vector<int> children;
    for (const auto& part : parts) {
      representatives.push_back(part.front());
      children.push_back(build(part));
    }
    auto& node = tree_.nodes[id];
    node.kind = kind;
    node.children = std::move(children);
    node.quotient = g_.induced(representatives).graph.with_unit_weights();
    return id;
  }

  // For a connected and co-connected graph the maximal proper modules
  // partition the vertex set; v's part collects every u whose pair
  // closure with v stays proper.
  static std::vector<VertexSet> maximal_proper_modules(const WeightedGraph& h) {
    const int n = h.size();
    std::vector<int> part_of(n, -1);
    std::vector<VertexSet> parts;
    for (Vertex v = 0; v < n; ++v) {
      if (part_of[v] >= 0) continue;
      const int id = static_cast<int>(parts.size());
      part_of[v] = id;
      for (Vertex u = v + 1; u < n; ++u) {
        if (part_of[u] >= 0) continue;
        const Vertex pair[2] = {v, u};
        auto closure = module_closure(h, pair);
        if (static_cast<int>(closure.size()) == n) continue;
        for (Vertex x : closure) part_of[x] = id;
      }
      parts.emplace_back();
    }
    for (Vertex v = 0; v < n; ++v) parts[part_of[v]].push_back(v);
    return parts;
  }

  const WeightedGraph& g_;
  ModuleTree tree_;
};

}  // namespace

ModuleTree modular_decompose(const WeightedGraph& g) { return ModuleTreeBuilder(g).run(); }

bool is_prime(const WeightedGraph& g) {
  if (g.size() <= 1) return true;
  const auto tree = modular_decompose(g);
  const auto& root = tree.root_node();
  if (root.kind != ModuleKind::prime) return false;
  return std::all_of(root.children.begin(), root.children.end(),
                     [&](int c) { return tree.nodes[c].kind == ModuleKind::leaf; });
}

namespace {

WeightedColoring color_node(const WeightedGraph& g, const ModuleTree& tree, int id,
                            const ColoringSolver& prime_solver) {
  const auto& node = tree.nodes[id];
  if (node.kind == ModuleKind::leaf) {
    const Vertex v = node.vertices.front();
    return WeightedColoring{std::vector<VertexSet>(static_cast<std::size_t>(g.weight(v)), {v})};
  }
  std::vector<WeightedColoring> parts;
  for (int child : node.children) parts.push_back(color_node(g, tree, child, prime_solver));

  WeightedColoring out;
  switch (node.kind) {
    case ModuleKind::series:
      // Children are pairwise complete: palettes are disjoint.
      for (auto& part : parts) {
        for (auto& cls : part.classes) out.classes.push_back(std::move(cls));
      }
      break;
    case ModuleKind::parallel: {
      // Pairwise anticomplete: merge class i of every child.
      std::size_t width = 0;
      for (const auto& part : parts) width = std::max(width, part.classes.size());
      out.classes.resize(width);
      for (const auto& part : parts) {
        for (std::size_t i = 0; i < part.classes.size(); ++i) {
          auto& cls = out.classes[i];
          cls.insert(cls.end(), part.classes[i].begin(), part.classes[i].end());
        }
      }
      break;
    }
    case ModuleKind::prime: {
      std::vector<Weight> chi;
      for (const auto& part : parts) chi.push_back(part.class_count());
      const WeightedGraph quotient = node.quotient.with_weights(chi);
      const WeightedColoring outer = prime_solver(quotient);
      // Quotient vertex i consumes child i's classes in index order; any
      // coverage beyond chi[i] is dropped.
      std::vector<std::size_t> next(parts.size(), 0);
      for (const auto& qcls : outer.classes) {
        VertexSet merged;
        for (Vertex i : qcls) {
          if (next[i] >= parts[i].classes.size()) continue;
          const auto& inner = parts[i].classes[next[i]++];
          merged.insert(merged.end(), inner.begin(), inner.end());
        }
        out.classes.push_back(std::move(merged));
      }
      break;
    }
    case ModuleKind::leaf:
      break;
  }
  for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
  return out;
}

}  // namespace

WeightedColoring wvc_by_modules(const WeightedGraph& g, const ColoringSolver& prime_solver) {
  if (g.empty()) return {};
  const auto tree = modular_decompose(g);
  return color_node(g, tree, tree.root, prime_solver);
}

}  // namespace wvc
