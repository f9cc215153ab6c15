#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace oracle {

namespace {

struct Copy {
  Vertex origin;
  int index;
};

bool colour_blow_up(const WeightedGraph& g, const std::vector<Copy>& copies, std::vector<int>& colour,
                    std::size_t at, int k, int used) {
  if (at == copies.size()) return true;
  const Copy c = copies[at];
  // Copies of one vertex are interchangeable: force increasing colours.
  const int lo = c.index > 0 ? colour[at - 1] + 1 : 0;
  const int hi = std::min(k - 1, used);
  for (int col = lo; col <= hi; ++col) {
    bool ok = true;
    for (std::size_t j = 0; j < at && ok; ++j) {
      if (colour[j] != col) continue;
      const Vertex o = copies[j].origin;
      if (o == c.origin || g.adjacent(o, c.origin)) ok = false;
    }
    if (!ok) continue;
    colour[at] = col;
    if (colour_blow_up(g, copies, colour, at + 1, k, std::max(used, col + 1))) return true;
  }
  return false;
}

}  // namespace

int chromatic_weighted(const WeightedGraph& g) {
  std::vector<Copy> copies;
  for (Vertex v = 0; v < g.size(); ++v) {
    for (int i = 0; i < g.weight(v); ++i) copies.push_back({v, i});
  }
  if (copies.empty()) return 0;
  std::vector<int> colour(copies.size(), -1);
  for (int k = 1;; ++k) {
    if (colour_blow_up(g, copies, colour, 0, k, 0)) return k;
  }
}

std::optional<std::vector<Vertex>> induced_embedding(const WeightedGraph& g, const WeightedGraph& h) {
  const int k = h.size();
  std::vector<Vertex> tuple;
  std::vector<bool> used(g.size(), false);
  std::function<bool()> extend = [&]() -> bool {
    const int i = static_cast<int>(tuple.size());
    if (i == k) return true;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g.adjacent(tuple[j], v) == h.adjacent(j, i);
      if (!ok) continue;
      used[v] = true;
      tuple.push_back(v);
      if (extend()) return true;
      tuple.pop_back();
      used[v] = false;
    }
    return false;
  };
  if (extend()) return tuple;
  return std::nullopt;
}

bool induces_cycle(const WeightedGraph& g, std::uint64_t mask) {
  const int size = std::popcount(mask);
  if (size < 3) return false;
  Vertex first = -1;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!((mask >> v) & 1U)) continue;
    int deg = 0;
    for (Vertex u = 0; u < g.size(); ++u) {
      if (((mask >> u) & 1U) && g.adjacent(u, v)) ++deg;
    }
    if (deg != 2) return false;
    if (first < 0) first = v;
  }
  // 2-regular: a cycle exactly when connected.
  std::uint64_t seen = 1ULL << first;
  std::vector<Vertex> stack{first};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u = 0; u < g.size(); ++u) {
      if (((mask >> u) & 1U) && !((seen >> u) & 1U) && g.adjacent(u, v)) {
        seen |= 1ULL << u;
        stack.push_back(u);
      }
    }
  }
  return seen == mask;
}

bool has_hole_at_least(const WeightedGraph& g, int min_length) {
  const std::uint64_t limit = 1ULL << g.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) >= min_length && induces_cycle(g, mask)) return true;
  }
  return false;
}

int max_matching_size(const WeightedGraph& g) {
  std::vector<bool> matched(g.size(), false);
  std::function<int(Vertex)> best = [&](Vertex from) -> int {
    while (from < g.size() && matched[from]) ++from;
    if (from >= g.size()) return 0;
    matched[from] = true;
    int result = best(from + 1);
    for (Vertex u = from + 1; u < g.size(); ++u) {
      if (matched[u] || !g.adjacent(from, u)) continue;
      matched[u] = true;
      result = std::max(result, 1 + best(from + 1));
      matched[u] = false;
    }
    matched[from] = false;
    return result;
  };
  return best(0);
}

bool is_module(const WeightedGraph& g, std::uint64_t mask) {
  for (Vertex x = 0; x < g.size(); ++x) {
    if ((mask >> x) & 1U) continue;
    bool some = false;
    bool all = true;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (!((mask >> v) & 1U)) continue;
      if (g.adjacent(x, v)) {
        some = true;
      } else {
        all = false;
      }
    }
    if (some && !all) return false;
  }
  return true;
}

bool is_prime(const WeightedGraph& g) {
  const std::uint64_t limit = 1ULL << g.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size >= 2 && size < g.size() && is_module(g, mask)) return false;
  }
  return true;
}

bool is_clique(const WeightedGraph& g, std::uint64_t mask) {
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (((mask >> u) & 1U) && ((mask >> v) & 1U) && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool is_stable(const WeightedGraph& g, std::uint64_t mask) {
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (((mask >> u) & 1U) && ((mask >> v) & 1U) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

int components_without(const WeightedGraph& g, std::uint64_t removed) {
  std::uint64_t seen = removed;
  int count = 0;
  for (Vertex s = 0; s < g.size(); ++s) {
    if ((seen >> s) & 1U) continue;
    ++count;
    seen |= 1ULL << s;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u = 0; u < g.size(); ++u) {
        if (!((seen >> u) & 1U) && g.adjacent(u, v)) {
          seen |= 1ULL << u;
          stack.push_back(u);
        }
      }
    }
  }
  return count;
}

bool has_clique_cutset(const WeightedGraph& g) {
  const std::uint64_t limit = 1ULL << g.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (is_clique(g, mask) && components_without(g, mask) >= 2) return true;
  }
  return false;
}

std::int64_t max_weight_clique(const WeightedGraph& g) {
  const std::uint64_t limit = 1ULL << g.size();
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (!is_clique(g, mask)) continue;
    std::int64_t total = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
      if ((mask >> v) & 1U) total += g.weight(v);
    }
    best = std::max(best, total);
  }
  return best;
}

std::uint64_t mask_of(const std::vector<Vertex>& vs) {
  std::uint64_t mask = 0;
  for (Vertex v : vs) mask |= 1ULL << v;
  return mask;
}

}  // namespace oracle
