#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spantree/bigint.hpp"
#include "spantree/graph.hpp"

namespace spantree {

/// Multigraph arising from edge contraction: unordered vertex pairs with
/// integer multiplicities. Self-loops are discarded on the spot (a loop is
/// never part of a spanning tree).
class MultiGraph {
public:
  struct EdgeClass {
    int u, v;
    long long multiplicity;
  };

  explicit MultiGraph(const Graph& g) : n_(g.n()) {
    classes_.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
      classes_.push_back({u, v, 1});
  }

  MultiGraph(int n, std::vector<EdgeClass> classes)
      : n_(n), classes_(std::move(classes)) {}

  int n() const { return n_; }
  const std::vector<EdgeClass>& classes() const { return classes_; }
  std::size_t distinct_edges() const { return classes_.size(); }

  bool connected() const {
    if (n_ == 1)
      return true;
    std::vector<std::vector<int>> adj(n_);
    for (const auto& c : classes_) {
      adj[c.u].push_back(c.v);
      adj[c.v].push_back(c.u);
    }
    std::vector<char> seen(n_, 0);
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
    return visited == n_;
  }

  /// Graph with vertices u, v merged; parallel classes coalesce by summing
  /// multiplicities and loops vanish.
  MultiGraph contracted(int u, int v) const {
    // Relabel: v collapses into u, indices above v shift down by one.
    auto relabel = [&](int w) {
      if (w == v)
        w = u;
      return w > v ? w - 1 : w;
    };
    std::map<std::pair<int, int>, long long> merged;
    for (const auto& c : classes_) {
      int a = relabel(c.u);
      int b = relabel(c.v);
      if (a == b)
        continue;
      if (a > b)
        std::swap(a, b);
      merged[{a, b}] += c.multiplicity;
    }
    std::vector<EdgeClass> classes;
    classes.reserve(merged.size());
    for (const auto& [key, mult] : merged)
      classes.push_back({key.first, key.second, mult});
    return MultiGraph(n_ - 1, std::move(classes));
  }

  MultiGraph without_class(std::size_t index) const {
    std::vector<EdgeClass> classes = classes_;
    classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(index));
    return MultiGraph(n_, std::move(classes));
  }

private:
  int n_;
  std::vector<EdgeClass> classes_;
};

/// Brute-force spanning-tree count by deletion-contraction:
/// tau(G) = tau(G - e) + k * tau(G / e) for an edge class of multiplicity k.
/// A pendant vertex with a single incident class of multiplicity k forces
/// one of its k parallel edges into every spanning tree, so it contracts
/// directly with factor k. No memoization; practical up to ~16 distinct
/// edge classes.
inline BigInt tau_deletion_contraction(const MultiGraph& g) {
  if (g.n() == 1)
    return BigInt(1);
  if (!g.connected())
    return BigInt(0);

  // Pendant shortcut.
  std::vector<int> incident(g.n(), 0);
  for (const auto& c : g.classes()) {
    ++incident[c.u];
    ++incident[c.v];
  }
  for (std::size_t i = 0; i < g.classes().size(); ++i) {
    const auto& c = g.classes()[i];
    if (incident[c.u] == 1 || incident[c.v] == 1) {
      return BigInt(c.multiplicity) * tau_deletion_contraction(g.contracted(c.u, c.v));
    }
  }

  const auto& c = g.classes().front();
  BigInt deleted = tau_deletion_contraction(g.without_class(0));
  BigInt contracted = tau_deletion_contraction(g.contracted(c.u, c.v));
  return deleted + BigInt(c.multiplicity) * contracted;
}

inline BigInt tau_deletion_contraction(const Graph& g) {
  return tau_deletion_contraction(MultiGraph(g));
}

inline constexpr int kSubsetEnumerationMaxEdges = 24;

/// Second independent counter: enumerate all (n-1)-edge subsets and count
/// the ones that form a spanning tree (acyclic and covering all vertices).
/// Combinatorial in m, hence the hard m <= 24 limit.
inline BigInt tau_subset_enumeration(const Graph& g) {
  const int n = g.n();
  const int m = g.m();
  if (m > kSubsetEnumerationMaxEdges)
    throw std::length_error(
        "tau_subset_enumeration: limited to graphs with m <= 24");
  if (n == 1)
    return BigInt(1);
  const int need = n - 1;
  if (need > m)
    return BigInt(0);

  const auto& edges = g.edges();
  std::vector<int> parent(n);
  std::vector<int> pick(need);
  for (int i = 0; i < need; ++i)
    pick[i] = i;

  auto find_root = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };

  long long count = 0;
  while (true) {
    for (int v = 0; v < n; ++v)
      parent[v] = v;
    bool acyclic = true;
    for (int i = 0; i < need && acyclic; ++i) {
      const auto& [u, v] = edges[pick[i]];
      int ru = find_root(u);
      int rv = find_root(v);
      if (ru == rv)
        acyclic = false;
      else
        parent[ru] = rv;
    }
    if (acyclic)
      ++count;  // n-1 acyclic edges on n vertices already span

    // Next combination in lexicographic order.
    int i = need - 1;
    while (i >= 0 && pick[i] == m - need + i)
      --i;
    if (i < 0)
      break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  return BigInt(count);
}

}  // namespace spantree
