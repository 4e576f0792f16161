#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spantree {

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept canonically as sorted unique (min,max) pairs, so equality
/// is structural: same vertex count, same edge set. Construction validates
/// the simple-graph invariants and rejects the empty graph (n = 0).
class Graph {
public:
  using Edge = std::pair<int, int>;

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1)
      throw std::invalid_argument("Graph: vertex count must be positive");
    for (auto& [u, v] : edges_) {
      if (u == v)
        throw std::invalid_argument("Graph: self-loops are not allowed");
      if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("Graph: edge endpoint out of range");
      if (u > v)
        std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  static Graph edgeless(int n) { return Graph(n, {}); }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    if (u > v)
      std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
      ++deg[u];
      ++deg[v];
    }
    return deg;
  }

  std::vector<std::vector<int>> adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [u, v] : edges_) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }

  bool operator==(const Graph& other) const = default;

private:
  int n_;
  std::vector<Edge> edges_;
};

/// Per-vertex degrees; sums to 2m (handshake lemma).
inline std::vector<int> degree_sequence(const Graph& g) { return g.degrees(); }

/// True iff every vertex is reachable from vertex 0. A single vertex is
/// connected.
inline bool is_connected(const Graph& g) {
  if (g.n() == 1)
    return true;
  auto adj = g.adjacency_lists();
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == g.n();
}

/// True iff the graph has all n(n-1)/2 possible edges.
inline bool is_complete(const Graph& g) {
  long long n = g.n();
  return static_cast<long long>(g.m()) == n * (n - 1) / 2;
}

}  // namespace spantree
