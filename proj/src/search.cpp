#include <algorithm>
#include <bit>
#include <unordered_map>

#include "wvc/engines.hpp"
#include "wvc/errors.hpp"

namespace wvc {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

struct WeightVectorHash {
  std::size_t operator()(const std::vector<Weight>& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Weight x : w) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

class StableSetSearch {
 public:
  StableSetSearch(const WeightedGraph& g, std::uint64_t budget)
      : n_(g.size()), adj_(g.size(), 0), budget_(budget) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (g.adjacent(u, v)) adj_[u] |= bit(v);
      }
    }
    // Independence number, for the ceil(sum / alpha) bound.
    const std::vector<Weight> unit(n_, 1);
    std::vector<Mask> co(n_);
    for (int v = 0; v < n_; ++v) co[v] = ~adj_[v] & ~bit(v) & all_mask();
    alpha_ = std::max<Weight>(1, clique_bound(co, all_mask(), unit));
  }

  Mask all_mask() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

  Weight lower_bound(const std::vector<Weight>& w) const {
    Mask positive = 0;
    Weight total = 0;
    for (int v = 0; v < n_; ++v) {
      if (w[v] > 0) positive |= bit(v);
      total += w[v];
    }
    const Weight by_alpha = (total + alpha_ - 1) / alpha_;
    return std::max(by_alpha, clique_bound(adj_, positive, w));
  }

  // Returns the exact optimum when it is below `ub`, otherwise some value
  // >= ub that is a valid lower bound.
  Weight solve(std::vector<Weight>& w, Weight ub) {
    if (++nodes_ > budget_) throw BudgetExceeded("search exceeded node budget of " +
                                                 std::to_string(budget_));
    Mask positive = 0;
    for (int v = 0; v < n_; ++v) {
      if (w[v] > 0) positive |= bit(v);
    }
    if (positive == 0) return 0;
    Weight lo = 0;
    if (auto it = memo_.find(w); it != memo_.end()) {
      if (it->second.exact) return it->second.value;
      lo = it->second.value;
    }
    lo = std::max(lo, lower_bound(w));
    if (lo >= ub) {
      memo_[w] = {lo, false, 0};
      return lo;
    }
    const int v = std::countr_zero(positive);
    const auto sets = maximal_stable_sets_with(v, positive);
    Weight best = ub;
    Mask choice = 0;
    for (Mask s : sets) {
      for (Mask m = s; m; m &= m - 1) --w[std::countr_zero(m)];
      const Weight r = solve(w, best - 1);
      for (Mask m = s; m; m &= m - 1) ++w[std::countr_zero(m)];
      if (r < best - 1) {
        best = r + 1;
        choice = s;
        if (best == lo) break;
      }
    }
    if (best < ub) {
      memo_[w] = {best, true, choice};
      return best;
    }
    memo_[w] = {ub, false, 0};
    return ub;
  }

  WeightedColoring reconstruct(std::vector<Weight> w) const {
    WeightedColoring out;
    while (std::any_of(w.begin(), w.end(), [](Weight x) { return x > 0; })) {
      const auto& entry = memo_.at(w);
      VertexSet cls;
      for (Mask m = entry.choice; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        cls.push_back(v);
        --w[v];
      }
      out.classes.push_back(std::move(cls));
    }
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Entry {
    Weight value;
    bool exact;
    Mask choice;
  };

  // Maximal stable sets of G[positive] that contain v, largest first.
  std::vector<Mask> maximal_stable_sets_with(int v, Mask positive) const {
    std::vector<Mask> out;
    const Mask candidates = positive & ~adj_[v] & ~bit(v);
    enumerate_stable(bit(v), candidates, 0, out);
    std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) {
      return std::popcount(a) > std::popcount(b);
    });
    return out;
  }

  // Bron-Kerbosch with pivoting on the complement graph.
  void enumerate_stable(Mask r, Mask p, Mask x, std::vector<Mask>& out) const {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    const Mask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (Mask m = px; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      const int count = std::popcount(p & ~adj_[u] & ~bit(u));
      if (count > best) {
        best = count;
        pivot = u;
      }
    }
    // Branch on p minus the pivot's non-neighbours.
    Mask branch = p & (adj_[pivot] | bit(pivot));
    for (Mask m = branch; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      const Mask non_nbrs = ~adj_[u] & ~bit(u);
      enumerate_stable(r | bit(u), p & non_nbrs, x & non_nbrs, out);
      p &= ~bit(u);
      x |= bit(u);
    }
  }

  static void clique_expand(const std::vector<Mask>& adj, Mask candidates,
                            const std::vector<Weight>& w, Weight current, Weight& best) {
    int order[64];
    Weight bound[64];
    int count = 0;
    Weight running = 0;
    Mask rest = candidates;
    while (rest) {
      Mask q = rest;
      Weight heaviest = 0;
      const int first = count;
      while (q) {
        const int v = std::countr_zero(q);
        order[count++] = v;
        heaviest = std::max(heaviest, w[v]);
        q &= ~adj[v] & ~bit(v);
        rest &= ~bit(v);
      }
      running += heaviest;
      for (int i = first; i < count; ++i) bound[i] = running;
    }
    Mask remaining = candidates;
    for (int i = count - 1; i >= 0; --i) {
      if (current + bound[i] <= best) return;
      const int v = order[i];
      remaining &= ~bit(v);
      const Mask next = remaining & adj[v];
      const Weight with_v = current + w[v];
      if (next == 0) {
        best = std::max(best, with_v);
      } else {
        clique_expand(adj, next, w, with_v, best);
      }
    }
  }

  static Weight clique_bound(const std::vector<Mask>& adj, Mask candidates,
                             const std::vector<Weight>& w) {
    Weight best = 0;
    if (candidates) clique_expand(adj, candidates, w, 0, best);
    return best;
  }

  int n_;
  std::vector<Mask> adj_;
  Weight alpha_ = 1;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::vector<Weight>, Entry, WeightVectorHash> memo_;
};

SearchResult run_search(const WeightedGraph& g, const SearchOptions& options, bool greedy_seed) {
  if (g.size() > 64) {
    throw BudgetExceeded("exact search supports at most 64 vertices, got " +
                         std::to_string(g.size()));
  }
  SearchResult result;
  if (g.empty()) return result;
  StableSetSearch search(g, options.node_budget);
  std::vector<Weight> w(g.weights().begin(), g.weights().end());
  result.root_lower_bound = search.lower_bound(w);
  WeightedColoring greedy = greedy_wvc(g);
  result.greedy_upper_bound = greedy.class_count();
  if (greedy_seed) {
    if (result.root_lower_bound >= result.greedy_upper_bound) {
      result.coloring = std::move(greedy);
      return result;
    }
    const Weight value = search.solve(w, result.greedy_upper_bound);
    result.nodes = search.nodes();
    result.coloring = value < result.greedy_upper_bound ? search.reconstruct(w) : std::move(greedy);
    return result;
  }
  const Weight value = search.solve(w, g.total_weight() + 1);
  (void)value;
  result.nodes = search.nodes();
  result.coloring = search.reconstruct(w);
  return result;
}

}  // namespace

SearchResult branch_and_bound_wvc(const WeightedGraph& g, const SearchOptions& options) {
  return run_search(g, options, true);
}

WeightedColoring oracle_wvc(const WeightedGraph& g, const SearchOptions& options) {
  return run_search(g, options, false).coloring;
}

WeightedColoring perfect_wvc(const WeightedGraph& g, const SearchOptions& options) {
  return run_search(g, options, true).coloring;
}

WeightedColoring greedy_wvc(const WeightedGraph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> colors(n);
  int palette = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> blocked(static_cast<std::size_t>(palette) + g.weight(v), false);
    for (Vertex u = 0; u < v; ++u) {
      if (!g.adjacent(u, v)) continue;
      for (int c : colors[u]) blocked[c] = true;
    }
    for (int c = 0; static_cast<Weight>(colors[v].size()) < g.weight(v); ++c) {
      if (!blocked[c]) colors[v].push_back(c);
    }
    palette = std::max(palette, colors[v].back() + 1);
  }
  WeightedColoring out;
  out.classes.resize(palette);
  for (Vertex v = 0; v < n; ++v) {
    for (int c : colors[v]) out.classes[c].push_back(v);
  }
  return out;
}

}  // namespace wvc
