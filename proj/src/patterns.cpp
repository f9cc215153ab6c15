#include "wvc/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

#include "wvc/errors.hpp"

namespace wvc {

Pattern Pattern::path(int k) {
  if (k < 1 || k > 6) throw InputError("P_k supported for 1 <= k <= 6");
  return Pattern("P" + std::to_string(k), make_path(k));
}

Pattern Pattern::cycle(int k) {
  if (k < 3 || k > 7) throw InputError("C_k supported for 3 <= k <= 7");
  return Pattern("C" + std::to_string(k), make_cycle(k));
}

Pattern Pattern::complete(int k) {
  if (k < 1 || k > 5) throw InputError("K_k supported for 1 <= k <= 5");
  return Pattern("K" + std::to_string(k), make_complete(k));
}

Pattern Pattern::edgeless(int k) {
  if (k < 1 || k > 4) throw InputError("O_k supported for 1 <= k <= 4");
  return Pattern("O" + std::to_string(k), make_edgeless(k));
}

Pattern Pattern::dart() {
  return Pattern("dart", WeightedGraph::build(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 4}}));
}

Pattern Pattern::banner() {
  return Pattern("banner", WeightedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}));
}

Pattern Pattern::bull() {
  return Pattern("bull", WeightedGraph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}}));
}

Pattern Pattern::fork() {
  return Pattern("fork", WeightedGraph::build(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}));
}

Pattern Pattern::house() { return Pattern("house", make_path(5).complement()); }

Pattern Pattern::hammer() { return Pattern("hammer", banner().graph().complement()); }

Pattern Pattern::co_dart() { return Pattern("co-dart", dart().graph().complement()); }

Pattern Pattern::gem() {
  return Pattern("gem",
                 WeightedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}));
}

Pattern Pattern::by_name(std::string_view name) {
  std::string key;
  for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "dart") return dart();
  if (key == "banner") return banner();
  if (key == "bull") return bull();
  if (key == "fork" || key == "chair") return fork();
  if (key == "house") return house();
  if (key == "hammer") return hammer();
  if (key == "co-dart" || key == "codart") return co_dart();
  if (key == "gem") return gem();
  if (key.size() == 2 && std::isdigit(static_cast<unsigned char>(key[1]))) {
    const int k = key[1] - '0';
    switch (key[0]) {
      case 'p': return path(k);
      case 'c': return cycle(k);
      case 'k': return complete(k);
      case 'o': return edgeless(k);
      default: break;
    }
  }
  throw InputError("unknown pattern '" + std::string(name) + "'");
}

std::vector<Pattern> Pattern::catalog() {
  std::vector<Pattern> out;
  for (int k = 1; k <= 6; ++k) out.push_back(path(k));
  for (int k = 3; k <= 7; ++k) out.push_back(cycle(k));
  for (int k = 1; k <= 5; ++k) out.push_back(complete(k));
  for (int k = 1; k <= 4; ++k) out.push_back(edgeless(k));
  for (auto p : {dart(), banner(), bull(), fork(), house(), hammer(), co_dart(), gem()}) {
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const WeightedGraph& g, const WeightedGraph& p)
      : g_(g), p_(p), image_(p.size(), -1), used_(g.size(), false) {}

  // Fixes pattern vertex `slot` to `v` before searching (slot < 0: none).
  std::optional<Embedding> run(int slot = -1, Vertex v = -1) {
    if (p_.size() > g_.size()) return std::nullopt;
    fixed_slot_ = slot;
    if (slot >= 0) {
      image_[slot] = v;
      used_[v] = true;
    }
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool consistent(int i, Vertex v) const {
    for (int j = 0; j < p_.size(); ++j) {
      if (j == i || image_[j] < 0) continue;
      if (p_.adjacent(i, j) != g_.adjacent(v, image_[j])) return false;
    }
    return true;
  }

  bool extend(int i) {
    if (i == p_.size()) return true;
    if (i == fixed_slot_) return consistent(i, image_[i]) && extend(i + 1);
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (used_[v] || !consistent(i, v)) continue;
      image_[i] = v;
      used_[v] = true;
      if (extend(i + 1)) return true;
      used_[v] = false;
      image_[i] = -1;
    }
    return false;
  }

  const WeightedGraph& g_;
  const WeightedGraph& p_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  int fixed_slot_ = -1;
};

}  // namespace

std::optional<Embedding> find_induced(const WeightedGraph& g, const Pattern& p) {
  return EmbeddingSearch(g, p.graph()).run();
}

std::optional<Embedding> find_induced_through(const WeightedGraph& g, const Pattern& p,
                                              Vertex v) {
  std::optional<Embedding> best;
  for (int slot = 0; slot < p.size(); ++slot) {
    auto found = EmbeddingSearch(g, p.graph()).run(slot, v);
    if (found && (!best || *found < *best)) best = std::move(found);
  }
  return best;
}

FreenessResult is_free(const WeightedGraph& g, std::span<const Pattern> patterns) {
  for (const auto& p : patterns) {
    if (auto e = find_induced(g, p)) return {false, p.name(), std::move(*e)};
  }
  return {};
}

std::optional<std::vector<Vertex>> find_triangle(const WeightedGraph& g) {
  const int n = g.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) && g.adjacent(b, c)) return std::vector<Vertex>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_triad(const WeightedGraph& g) {
  const int n = g.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) && !g.adjacent(b, c)) return std::vector<Vertex>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

bool is_induced_cycle(const WeightedGraph& g, std::span<const Vertex> order) {
  const int k = static_cast<int>(order.size());
  if (k < 3) return false;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (order[i] == order[j]) return false;
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(order[i], order[j]) != consecutive) return false;
    }
  }
  return true;
}

std::optional<HoleWitness> find_hole_at_least(const WeightedGraph& g, int min_length) {
  if (min_length != 6) throw InputError("find_hole_at_least supports only length 6");
  const int n = g.size();
  if (n < 6) return std::nullopt;
  const Pattern p5 = Pattern::path(5);
  // Enumerate every induced P5 p1..p5 and look for a shortest p5 -> p1 path
  // avoiding N[p2] u N[p3] u N[p4] (apart from p1, p5 themselves).
  std::vector<Vertex> image(5, -1);
  std::vector<bool> used(n, false);
  std::optional<HoleWitness> found;

  auto close_cycle = [&]() -> bool {
    std::vector<bool> blocked(n, false);
    for (int i = 1; i <= 3; ++i) {
      const Vertex c = image[i];
      blocked[c] = true;
      for (Vertex u = 0; u < n; ++u) {
        if (g.adjacent(c, u)) blocked[u] = true;
      }
    }
    const Vertex from = image[4], to = image[0];
    blocked[from] = blocked[to] = false;
    std::vector<Vertex> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<Vertex> queue;
    queue.push(from);
    seen[from] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      if (v == to) break;
      for (Vertex u = 0; u < n; ++u) {
        if (!seen[u] && !blocked[u] && g.adjacent(v, u)) {
          seen[u] = true;
          parent[u] = v;
          queue.push(u);
        }
      }
    }
    if (!seen[to]) return false;
    HoleWitness hole{{image.begin(), image.end()}};
    // Interior of the path from p5 back to p1, in order.
    std::vector<Vertex> back;
    for (Vertex v = parent[to]; v != from; v = parent[v]) back.push_back(v);
    std::reverse(back.begin(), back.end());
    hole.vertices.insert(hole.vertices.end(), back.begin(), back.end());
    found = std::move(hole);
    return true;
  };

  auto extend = [&](auto&& self, int i) -> bool {
    if (i == 5) return close_cycle();
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = g.adjacent(v, image[j]) == (j == i - 1);
      }
      if (!ok) continue;
      image[i] = v;
      used[v] = true;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  extend(extend, 0);
  return found;
}

std::optional<HoleWitness> find_c5(const WeightedGraph& g) {
  if (auto e = find_induced(g, Pattern::cycle(5))) return HoleWitness{std::move(*e)};
  return std::nullopt;
}

std::optional<Embedding> find_p5(const WeightedGraph& g) {
  return find_induced(g, Pattern::path(5));
}

std::optional<HoleWitness> find_odd_hole_between(const WeightedGraph& g, int min_length,
                                                 int max_length, std::uint64_t node_budget) {
  const int n = g.size();
  std::uint64_t nodes = 0;
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);
  std::optional<HoleWitness> found;

  // Grows induced paths s = p0 < every other vertex; a vertex adjacent to
  // the last one and to none of the others extends it, and one adjacent to
  // exactly p0 and the last vertex closes a hole.
  auto extend = [&](auto&& self) -> bool {
    if (++nodes > node_budget) throw BudgetExceeded("odd hole search exceeded node budget");
    const int k = static_cast<int>(path.size());
    const Vertex s = path.front(), last = path.back();
    for (Vertex u = s + 1; u < n; ++u) {
      if (on_path[u] || !g.adjacent(last, u)) continue;
      bool clean = true;
      for (int i = 1; i + 1 < k && clean; ++i) clean = !g.adjacent(u, path[i]);
      if (!clean) continue;
      if (k >= 2 && g.adjacent(u, s)) {
        const int length = k + 1;
        if (length >= min_length && length <= max_length && length % 2 == 1) {
          path.push_back(u);
          found = HoleWitness{path};
          return true;
        }
        continue;
      }
      if (k + 1 >= max_length) continue;
      path.push_back(u);
      on_path[u] = true;
      if (self(self)) return true;
      on_path[u] = false;
      path.pop_back();
    }
    return false;
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.assign(n, false);
    on_path[s] = true;
    if (extend(extend)) return found;
  }
  return std::nullopt;
}

std::optional<HoleWitness> find_odd_hole(const WeightedGraph& g, int max_length,
                                         std::uint64_t node_budget) {
  return find_odd_hole_between(g, 5, max_length, node_budget);
}

std::optional<HoleWitness> find_odd_antihole(const WeightedGraph& g, int max_length,
                                             std::uint64_t node_budget) {
  return find_odd_hole_between(g.complement(), 7, max_length, node_budget);
}

HoleNeighborhoodClass hole_neighborhood_class(const WeightedGraph& g, const HoleWitness& b,
                                              Vertex x) {
  const int len = b.length();
  if (len < 6) throw InputError("hole_neighborhood_class needs a hole of length >= 6");
  if (std::find(b.vertices.begin(), b.vertices.end(), x) != b.vertices.end()) {
    throw InputError("vertex " + std::to_string(x) + " lies on the hole");
  }
  std::vector<bool> in(len);
  int count = 0;
  for (int i = 0; i < len; ++i) {
    in[i] = g.adjacent(x, b.vertices[i]);
    count += in[i];
  }
  auto at = [&](int i) { return in[((i % len) + len) % len]; };
  if (count == len) return {HoleNeighborhood::full, -1};
  bool stable = true;
  for (int i = 0; i < len && stable; ++i) stable = !(at(i) && at(i + 1));
  if (stable) return {HoleNeighborhood::stable, -1};
  for (int i = 0; i < len; ++i) {
    if (!(at(i - 1) && at(i) && at(i + 1))) continue;
    if (count == 3) return {HoleNeighborhood::consecutive_triple, i};
    if (count == 4 && len == 6 && at(i + 3)) return {HoleNeighborhood::triple_plus, i};
  }
  return {HoleNeighborhood::other, -1};
}

std::string to_string(HoleNeighborhood kind) {
  switch (kind) {
    case HoleNeighborhood::stable: return "stable";
    case HoleNeighborhood::full: return "full";
    case HoleNeighborhood::consecutive_triple: return "consecutive-triple";
    case HoleNeighborhood::triple_plus: return "triple-plus";
    case HoleNeighborhood::other: return "other";
  }
  return "other";
}

}  // namespace wvc
