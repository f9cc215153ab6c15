#include <algorithm>
#include <deque>

#include "wvc/engines.hpp"

namespace wvc {

namespace {

// Edmonds' blossom algorithm, O(V^3), exposed roots tried in index order.
class Blossom {
 public:
  explicit Blossom(const WeightedGraph& g)
      : g_(g), n_(g.size()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {
    adj_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
  }

  Matching run() {
    // Greedy start, then augment from every exposed vertex.
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      for (Vertex u : adj_[v]) {
        if (match_[u] < 0) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] >= 0) continue;
      Vertex v = find_path(root);
      while (v >= 0) {
        const Vertex pv = parent_[v];
        const Vertex ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    Matching out;
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] > v) out.emplace_back(v, match_[v]);
    }
    return out;
  }

 private:
  Vertex lca(Vertex a, Vertex b) const {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          const Vertex current = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = current;
            if (!used_[i]) {
              used_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const WeightedGraph& g_;
  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

}  // namespace

Matching blossom_max_matching(const WeightedGraph& g) { return Blossom(g).run(); }

}  // namespace wvc
