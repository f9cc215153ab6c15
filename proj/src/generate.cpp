#include <algorithm>

#include "wvc/decomp.hpp"
#include "wvc/errors.hpp"
#include "wvc/harness.hpp"

namespace wvc {

std::uint64_t Rng::next() { return engine_(); }

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

namespace {

using Adjacency = std::vector<std::vector<bool>>;

WeightedGraph to_graph(const Adjacency& adj, std::span<const Weight> weights) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.emplace_back(u, v);
    }
  }
  return WeightedGraph::build(n, edges, weights);
}

bool passes_filter(const WeightedGraph& g, std::span<const Pattern> filter) {
  return is_free(g, filter).free;
}

bool free_through(const WeightedGraph& g, std::span<const Pattern> filter, Vertex v) {
  return std::none_of(filter.begin(), filter.end(),
                      [&](const Pattern& p) { return find_induced_through(g, p, v).has_value(); });
}

std::optional<Adjacency> grow(const GenSpec& spec, int n, Rng& rng) {
  Adjacency adj;
  auto add_vertex = [&adj] {
    for (auto& row : adj) row.push_back(false);
    adj.emplace_back(adj.size() + 1, false);
  };
  auto link = [&adj](int u, int v) { adj[u][v] = adj[v][u] = true; };
  switch (spec.seed_structure) {
    case SeedStructure::none: break;
    case SeedStructure::hole: {
      const int len = static_cast<int>(rng.between(spec.hole_min, spec.hole_max));
      for (int i = 0; i < len; ++i) add_vertex();
      for (int i = 0; i < len; ++i) link(i, (i + 1) % len);
      break;
    }
    case SeedStructure::p5:
      for (int i = 0; i < 5; ++i) add_vertex();
      for (int i = 0; i + 1 < 5; ++i) link(i, i + 1);
      break;
  }
  const std::vector<Weight> unit_weights;
  if (!adj.empty() && !passes_filter(to_graph(adj, unit_weights), spec.filter)) return std::nullopt;
  while (static_cast<int>(adj.size()) < n) {
    const int v = static_cast<int>(adj.size());
    add_vertex();
    bool placed = false;
    for (int attempt = 0; attempt < spec.grow_retries && !placed; ++attempt) {
      for (int u = 0; u < v; ++u) adj[u][v] = adj[v][u] = rng.chance(spec.p);
      placed = free_through(to_graph(adj, unit_weights), spec.filter, v);
    }
    if (!placed) return std::nullopt;
  }
  return adj;
}

Adjacency erdos_renyi(const GenSpec& spec, int n, Rng& rng) {
  Adjacency adj(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) adj[u][v] = adj[v][u] = rng.chance(spec.p);
  }
  return adj;
}

// Fisher-Yates relabelling so planted structure does not sit on the
// lowest indices.
Adjacency relabel(const Adjacency& adj, Rng& rng) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.between(0, i)]);
  Adjacency out(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) out[perm[u]][perm[v]] = adj[u][v];
  }
  return out;
}

}  // namespace

std::optional<WeightedGraph> generate(const GenSpec& spec) {
  if (spec.n < 0) throw InputError("n must be nonnegative");
  if (spec.p < 0.0 || spec.p > 1.0) throw InputError("p must lie in [0, 1]");
  if (spec.max_weight < 1) throw InputError("max weight must be at least 1");
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    const int n = spec.min_n > 0 ? static_cast<int>(rng.between(std::min(spec.min_n, spec.n), spec.n))
                                 : spec.n;
    std::optional<Adjacency> adj;
    if (spec.mode == GenMode::grow) {
      adj = grow(spec, n, rng);
      if (adj) adj = relabel(*adj, rng);
    } else {
      adj = erdos_renyi(spec, n, rng);
    }
    if (!adj) continue;
    std::vector<Weight> weights(adj->size());
    for (auto& w : weights) w = rng.between(1, spec.max_weight);
    WeightedGraph g = to_graph(*adj, weights);
    if (spec.mode == GenMode::erdos_renyi && !passes_filter(g, spec.filter)) continue;
    if (spec.require_prime && !is_prime(g)) continue;
    return g;
  }
  return std::nullopt;
}

}  // namespace wvc
