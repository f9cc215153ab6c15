#include "wvc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "wvc/errors.hpp"

namespace wvc {

WeightedGraph::WeightedGraph(int n)
    : n_(n),
      words_(static_cast<std::size_t>((n + 63) / 64)),
      rows_(static_cast<std::size_t>(n) * words_, 0),
      weights_(static_cast<std::size_t>(n), 1) {}

void WeightedGraph::set_edge(Vertex u, Vertex v) {
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

WeightedGraph WeightedGraph::build(int n, std::span<const Edge> edges,
                                   std::span<const Weight> weights) {
  if (n < 0) throw InputError("negative vertex count " + std::to_string(n));
  WeightedGraph g(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge #" + std::to_string(i) + " (" + std::to_string(u) + "," +
                       std::to_string(v) + ") has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (u == v) {
      throw InputError("edge #" + std::to_string(i) + " is a self-loop at vertex " +
                       std::to_string(u));
    }
    g.set_edge(u, v);
  }
  if (!weights.empty()) {
    if (weights.size() != static_cast<std::size_t>(n)) {
      throw InputError("expected " + std::to_string(n) + " weights, got " +
                       std::to_string(weights.size()));
    }
    for (int v = 0; v < n; ++v) {
      if (weights[v] < 1) {
        throw InputError("vertex " + std::to_string(v) + " has nonpositive weight " +
                         std::to_string(weights[v]));
      }
      g.weights_[v] = weights[v];
    }
  }
  return g;
}

WeightedGraph WeightedGraph::build(int n, std::initializer_list<Edge> edges,
                                   std::initializer_list<Weight> weights) {
  return build(n, std::span<const Edge>(edges.begin(), edges.size()),
               std::span<const Weight>(weights.begin(), weights.size()));
}

Weight WeightedGraph::total_weight() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

std::vector<Vertex> WeightedGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

int WeightedGraph::degree(Vertex v) const {
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    d += __builtin_popcountll(rows_[static_cast<std::size_t>(v) * words_ + w]);
  }
  return d;
}

int WeightedGraph::edge_count() const {
  int twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

WeightedGraph WeightedGraph::complement() const {
  WeightedGraph c(n_);
  c.weights_ = weights_;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) c.set_edge(u, v);
    }
  }
  return c;
}

InducedSubgraph WeightedGraph::induced(std::span<const Vertex> vertices) const {
  InducedSubgraph out{WeightedGraph(static_cast<int>(vertices.size())),
                      std::vector<Vertex>(vertices.begin(), vertices.end())};
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i < k; ++i) {
    out.graph.weights_[i] = weights_[vertices[i]];
    for (int j = i + 1; j < k; ++j) {
      if (adjacent(vertices[i], vertices[j])) out.graph.set_edge(i, j);
    }
  }
  return out;
}

WeightedGraph WeightedGraph::with_weights(std::span<const Weight> weights) const {
  if (weights.size() != static_cast<std::size_t>(n_)) {
    throw InputError("expected " + std::to_string(n_) + " weights, got " +
                     std::to_string(weights.size()));
  }
  WeightedGraph g = *this;
  for (int v = 0; v < n_; ++v) {
    if (weights[v] < 1) {
      throw InputError("vertex " + std::to_string(v) + " has nonpositive weight " +
                       std::to_string(weights[v]));
    }
    g.weights_[v] = weights[v];
  }
  return g;
}

WeightedGraph WeightedGraph::with_unit_weights() const {
  WeightedGraph g = *this;
  std::fill(g.weights_.begin(), g.weights_.end(), Weight{1});
  return g;
}

bool is_stable(const WeightedGraph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_clique(const WeightedGraph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

std::vector<VertexSet> components(const WeightedGraph& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex u = 0; u < n; ++u) {
        if (comp[u] < 0 && g.adjacent(v, u)) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const WeightedGraph& g) { return components(g).size() <= 1; }

BipartitionResult bipartition(const WeightedGraph& g) {
  const int n = g.size();
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex u = 0; u < n; ++u) {
        if (!g.adjacent(v, u)) continue;
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          parent[u] = v;
          depth[u] = depth[v] + 1;
          queue.push(u);
        } else if (side[u] == side[v]) {
          // Walk both endpoints up to their common ancestor.
          std::vector<Vertex> left{v}, right{u};
          Vertex a = v, b = u;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // common ancestor already in `left`
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          return {std::nullopt, left};
        }
      }
    }
  }
  Bipartition b;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? b.side_a : b.side_b).push_back(v);
  return {b, {}};
}

BlowUp blow_up(const WeightedGraph& g, std::span<const Weight> multiplicity) {
  const int n = g.size();
  std::span<const Weight> mult = multiplicity.empty() ? g.weights() : multiplicity;
  if (mult.size() != static_cast<std::size_t>(n)) {
    throw InputError("blow_up: expected " + std::to_string(n) + " multiplicities");
  }
  BlowUp out;
  std::vector<std::vector<Vertex>> copies(n);
  for (Vertex v = 0; v < n; ++v) {
    if (mult[v] < 1) {
      throw InputError("blow_up: vertex " + std::to_string(v) + " has multiplicity " +
                       std::to_string(mult[v]));
    }
    for (Weight k = 0; k < mult[v]; ++k) {
      copies[v].push_back(static_cast<Vertex>(out.original.size()));
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < copies[u].size(); ++i) {
      for (std::size_t j = i + 1; j < copies[u].size(); ++j) {
        edges.emplace_back(copies[u][i], copies[u][j]);
      }
    }
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (Vertex a : copies[u]) {
        for (Vertex b : copies[v]) edges.emplace_back(a, b);
      }
    }
  }
  out.graph = WeightedGraph::build(static_cast<int>(out.original.size()), edges);
  return out;
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const WeightedGraph& g) : g_(g) {}

  WeightedClique run() {
    std::vector<Vertex> all(g_.size());
    std::iota(all.begin(), all.end(), 0);
    // Heavier vertices first tends to find a good incumbent early.
    std::stable_sort(all.begin(), all.end(),
                     [&](Vertex a, Vertex b) { return g_.weight(a) > g_.weight(b); });
    expand(all);
    std::sort(best_.begin(), best_.end());
    return {best_, best_weight_};
  }

 private:
  void expand(const std::vector<Vertex>& candidates) {
    // Greedy colouring of the candidates; any clique among the first i
    // vertices of `order` uses at most one vertex from each of the classes
    // up to class(order[i]), hence the prefix sums of class maxima bound it.
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : candidates) {
      bool placed = false;
      for (auto& cls : classes) {
        if (std::none_of(cls.begin(), cls.end(), [&](Vertex u) { return g_.adjacent(u, v); })) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    std::vector<Vertex> order;
    std::vector<Weight> bound;
    Weight running = 0;
    for (const auto& cls : classes) {
      Weight heaviest = 0;
      for (Vertex v : cls) heaviest = std::max(heaviest, g_.weight(v));
      running += heaviest;
      for (Vertex v : cls) {
        order.push_back(v);
        bound.push_back(running);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current_weight_ + bound[i] <= best_weight_) return;
      const Vertex v = order[i];
      current_.push_back(v);
      current_weight_ += g_.weight(v);
      std::vector<Vertex> next;
      for (int j = 0; j < i; ++j) {
        if (g_.adjacent(v, order[j])) next.push_back(order[j]);
      }
      if (next.empty()) {
        if (current_weight_ > best_weight_) {
          best_weight_ = current_weight_;
          best_ = current_;
        }
      } else {
        expand(next);
      }
      current_.pop_back();
      current_weight_ -= g_.weight(v);
    }
  }

  const WeightedGraph& g_;
  std::vector<Vertex> current_, best_;
  Weight current_weight_ = 0, best_weight_ = 0;
};

}  // namespace

WeightedClique max_weight_clique(const WeightedGraph& g) { return CliqueSearch(g).run(); }

std::vector<Weight> coverage(const WeightedGraph& g, const WeightedColoring& c) {
  std::vector<Weight> cover(g.size(), 0);
  for (const auto& cls : c.classes) {
    for (Vertex v : cls) {
      if (v >= 0 && v < g.size()) ++cover[v];
    }
  }
  return cover;
}

ColoringVerdict validate_coloring(const WeightedGraph& g, const WeightedColoring& c) {
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& cls = c.classes[i];
    for (Vertex v : cls) {
      if (v < 0 || v >= g.size()) {
        return {false, "class " + std::to_string(i) + " names vertex " + std::to_string(v) +
                           " outside the graph"};
      }
    }
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        if (cls[a] == cls[b]) {
          return {false, "class " + std::to_string(i) + " repeats vertex " +
                             std::to_string(cls[a])};
        }
        if (g.adjacent(cls[a], cls[b])) {
          return {false, "class " + std::to_string(i) + " is not stable: edge " +
                             std::to_string(cls[a]) + "-" + std::to_string(cls[b])};
        }
      }
    }
  }
  auto cover = coverage(g, c);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (cover[v] < g.weight(v)) {
      return {false, "vertex " + std::to_string(v) + " covered " + std::to_string(cover[v]) +
                         " times, weight " + std::to_string(g.weight(v))};
    }
  }
  return {true, {}};
}

WeightedColoring lift_coloring(const WeightedColoring& c, std::span<const Vertex> to_parent) {
  WeightedColoring out;
  out.classes.reserve(c.classes.size());
  for (const auto& cls : c.classes) {
    VertexSet mapped;
    mapped.reserve(cls.size());
    for (Vertex v : cls) mapped.push_back(to_parent[v]);
    std::sort(mapped.begin(), mapped.end());
    out.classes.push_back(std::move(mapped));
  }
  return out;
}

WeightedGraph make_cycle(int n, std::span<const Weight> weights) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return WeightedGraph::build(n, edges, weights);
}

WeightedGraph make_path(int n, std::span<const Weight> weights) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return WeightedGraph::build(n, edges, weights);
}

WeightedGraph make_complete(int n, std::span<const Weight> weights) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return WeightedGraph::build(n, edges, weights);
}

WeightedGraph make_edgeless(int n, std::span<const Weight> weights) {
  return WeightedGraph::build(n, std::span<const Edge>{}, weights);
}

std::string to_string(std::span<const Vertex> s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

}  // namespace wvc
