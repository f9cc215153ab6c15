#include <algorithm>
#include <numeric>

#include "wvc/engines.hpp"
#include "wvc/errors.hpp"

namespace wvc {

WeightedColoring triadfree_wvc(const WeightedGraph& g) {
  if (auto triad = find_triad(g)) {
    throw PreconditionError("graph contains a triad " + to_string(*triad), "O3", *triad);
  }
  // Unit copies of every vertex; copies of distinct non-adjacent vertices
  // are joined, so a matching pairs vertices into stable classes.
  std::vector<Vertex> original;
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Weight k = 0; k < g.weight(v); ++k) original.push_back(v);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < original.size(); ++a) {
    for (std::size_t b = a + 1; b < original.size(); ++b) {
      const Vertex u = original[a], v = original[b];
      if (u != v && !g.adjacent(u, v)) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  const auto h = WeightedGraph::build(static_cast<int>(original.size()), edges);
  std::vector<Vertex> mate(original.size(), -1);
  for (auto [a, b] : blossom_max_matching(h)) {
    mate[a] = b;
    mate[b] = a;
  }
  WeightedColoring out;
  for (std::size_t a = 0; a < original.size(); ++a) {
    if (mate[a] < 0) {
      out.classes.push_back({original[a]});
    } else if (static_cast<std::size_t>(mate[a]) > a) {
      VertexSet cls{original[a], original[mate[a]]};
      std::sort(cls.begin(), cls.end());
      out.classes.push_back(std::move(cls));
    }
  }
  return out;
}

WeightedColoring bipartite_wvc(const WeightedGraph& g) {
  const auto split = bipartition(g);
  if (!split.sides) {
    throw PreconditionError("graph contains an odd cycle " + to_string(split.odd_cycle),
                            "odd-cycle", split.odd_cycle);
  }
  Weight chi = 0;
  for (Vertex v = 0; v < g.size(); ++v) chi = std::max(chi, g.weight(v));
  for (auto [u, v] : g.edges()) chi = std::max(chi, g.weight(u) + g.weight(v));
  WeightedColoring out;
  out.classes.resize(static_cast<std::size_t>(chi));
  // Side A takes the lowest colours, side B the highest.
  for (Vertex u : split.sides->side_a) {
    for (Weight c = 0; c < g.weight(u); ++c) out.classes[c].push_back(u);
  }
  for (Vertex v : split.sides->side_b) {
    for (Weight c = chi - g.weight(v); c < chi; ++c) out.classes[c].push_back(v);
  }
  for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
  return out;
}

Weight Hyperhole::vertex_count() const noexcept {
  return std::accumulate(sizes.begin(), sizes.end(), Weight{0});
}

Weight Hyperhole::clique_number() const noexcept {
  const int l = length();
  Weight best = 0;
  for (int i = 0; i < l; ++i) {
    best = std::max(best, sizes[i]);
    if (l > 1) best = std::max(best, sizes[i] + sizes[(i + 1) % l]);
  }
  return best;
}

Weight Hyperhole::chromatic_number() const {
  const int l = length();
  if (l < 5 || l % 2 == 0) throw InputError("hyperhole length must be odd and at least 5");
  const Weight n = vertex_count();
  return std::max(clique_number(), (2 * n + l - 2) / (l - 1));
}

namespace {

// Path-of-cliques finisher: `sizes` has at least one zero entry. Walking
// cyclically from a zero, each position takes the smallest colours unused
// by its predecessor, which needs exactly the clique number.
std::vector<VertexSet> color_broken_hyperhole(const std::vector<Weight>& sizes) {
  const int l = static_cast<int>(sizes.size());
  const int zero = static_cast<int>(std::find(sizes.begin(), sizes.end(), 0) - sizes.begin());
  std::vector<VertexSet> classes;
  std::vector<int> previous;
  for (int step = 1; step <= l; ++step) {
    const int pos = (zero + step) % l;
    std::vector<int> mine;
    for (int c = 0; static_cast<Weight>(mine.size()) < sizes[pos]; ++c) {
      if (std::find(previous.begin(), previous.end(), c) == previous.end()) mine.push_back(c);
    }
    for (int c : mine) {
      if (c >= static_cast<int>(classes.size())) classes.resize(c + 1);
      classes[c].push_back(pos);
    }
    previous = std::move(mine);
  }
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  return classes;
}

}  // namespace

WeightedColoring hyperhole_wvc(const Hyperhole& h) {
  const int l = h.length();
  if (l < 5 || l % 2 == 0) throw InputError("hyperhole length must be odd and at least 5");
  for (Weight s : h.sizes) {
    if (s < 1) throw InputError("hyperhole positions must be non-empty");
  }
  std::vector<Weight> sizes = h.sizes;
  WeightedColoring out;
  while (std::none_of(sizes.begin(), sizes.end(), [](Weight s) { return s == 0; })) {
    int pivot = 0;
    for (int i = 1; i < l; ++i) {
      if (sizes[i] + sizes[(i + 1) % l] < sizes[pivot] + sizes[(pivot + 1) % l]) pivot = i;
    }
    // With the pair (pivot, pivot+1) rotated to positions (l, 1), take one
    // vertex from each even position.
    VertexSet transversal;
    for (int k = 2; k < l; k += 2) transversal.push_back((pivot + k) % l);
    std::sort(transversal.begin(), transversal.end());
    for (Vertex p : transversal) --sizes[p];
    out.classes.push_back(std::move(transversal));
  }
  for (auto& cls : color_broken_hyperhole(sizes)) out.classes.push_back(std::move(cls));
  return out;
}

WeightedColoring weighted_hole_wvc(const WeightedGraph& g, const HoleWitness& hole) {
  if (hole.length() != g.size() || hole.length() < 5 || !is_induced_cycle(g, hole.vertices)) {
    throw PreconditionError("graph is not exactly the given hole", "hole", hole.vertices);
  }
  if (hole.length() % 2 == 0) return bipartite_wvc(g);
  Hyperhole h;
  for (Vertex v : hole.vertices) h.sizes.push_back(g.weight(v));
  WeightedColoring out = hyperhole_wvc(h);
  for (auto& cls : out.classes) {
    for (auto& p : cls) p = hole.vertices[p];
    std::sort(cls.begin(), cls.end());
  }
  return out;
}

}  // namespace wvc
