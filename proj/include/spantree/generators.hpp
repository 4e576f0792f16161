#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

/// SplitMix64: state advances by the golden-gamma constant, output is the
/// finalized state. Fixed here so seeded corpora reproduce bit-for-bit on
/// any platform.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection-free modulo; bound > 0.
  /// Bias is below 2^-53 for desk-scale bounds, irrelevant for corpus use.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

enum class Family { complete, path, cycle, star, fan, wheel };

inline std::optional<Family> family_from_name(std::string_view name) {
  if (name == "complete")
    return Family::complete;
  if (name == "path")
    return Family::path;
  if (name == "cycle")
    return Family::cycle;
  if (name == "star")
    return Family::star;
  if (name == "fan")
    return Family::fan;
  if (name == "wheel")
    return Family::wheel;
  return std::nullopt;
}

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::fan: return "fan";
    case Family::wheel: return "wheel";
  }
  return "?";
}

/// Named graph families on n vertices. Labeling conventions:
/// path/cycle vertices are consecutive (cycle adds the closing edge),
/// star/fan/wheel put the hub at the highest index n-1. The fan is a path
/// on n-1 vertices plus the hub joined to every path vertex; the wheel is
/// the same over a cycle. wheel(3) degenerates to K3 because the 2-vertex
/// rim cycle collapses to a single edge.
inline Graph generate(Family family, int n) {
  auto require = [&](int minimum) {
    if (n < minimum)
      throw std::domain_error(std::string(family_name(family)) +
                              " graph requires n >= " +
                              std::to_string(minimum));
  };
  std::vector<Graph::Edge> edges;
  switch (family) {
    case Family::complete:
      require(1);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          edges.emplace_back(u, v);
      break;
    case Family::path:
      require(1);
      for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, u + 1);
      break;
    case Family::cycle:
      require(3);
      for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, u + 1);
      edges.emplace_back(0, n - 1);
      break;
    case Family::star:
      require(1);
      for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, n - 1);
      break;
    case Family::fan:
      require(2);
      for (int u = 0; u + 2 < n; ++u)
        edges.emplace_back(u, u + 1);
      for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, n - 1);
      break;
    case Family::wheel:
      require(3);
      for (int u = 0; u + 2 < n; ++u)
        edges.emplace_back(u, u + 1);
      if (n > 3)
        edges.emplace_back(0, n - 2);
      for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, n - 1);
      break;
  }
  return Graph(n, std::move(edges));
}

/// Decode a Prufer sequence into the labeled tree it encodes: repeatedly
/// join the smallest-index leaf not remaining in the sequence to the next
/// sequence element. The sequence must have length n-2 with entries in
/// [0, n); the result is always a tree (connected, n-1 edges).
inline Graph prufer_decode(const std::vector<int>& seq, int n) {
  if (n < 2)
    throw std::domain_error("prufer_decode requires n >= 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("prufer_decode: sequence length must be n-2");
  for (int s : seq)
    if (s < 0 || s >= n)
      throw std::invalid_argument("prufer_decode: entry out of range [0, n)");

  std::vector<int> degree(n, 1);
  for (int s : seq)
    ++degree[s];

  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1)
      leaves.push(v);

  std::vector<Graph::Edge> edges;
  edges.reserve(n - 1);
  for (int s : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, s);
    --degree[leaf];
    if (--degree[s] == 1)
      leaves.push(s);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

/// Erdos-Renyi G(n, p) with the SplitMix64 stream seeded by `seed`.
/// Pairs are visited in lexicographic order (0,1), (0,2), ..., (n-2,n-1);
/// a pair is kept iff the top 53 bits of the draw fall below round(p * 2^53).
/// Identical (n, p, seed) yields the identical graph on every platform.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1)
    throw std::domain_error("random_graph requires n >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("random_graph: p must lie in [0, 1]");
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0));
  SplitMix64 rng(seed);
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((rng.next() >> 11) < threshold)
        edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace spantree
