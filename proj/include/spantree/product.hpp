#pragma once

#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

/// Cartesian product G1 x G2 with the row-major vertex contract
/// (i, j) -> i * n2 + j. Vertices (i,j) and (i',j') are adjacent iff they
/// agree in one coordinate and are adjacent in the other, so
/// m = n1*m2 + n2*m1 and deg(i,j) = deg_G1(i) + deg_G2(j).
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.n();
  const int n2 = g2.n();
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n1) * g2.m() +
                static_cast<std::size_t>(n2) * g1.m());
  for (int i = 0; i < n1; ++i)
    for (const auto& [j, jp] : g2.edges())
      edges.emplace_back(i * n2 + j, i * n2 + jp);
  for (const auto& [i, ip] : g1.edges())
    for (int j = 0; j < n2; ++j)
      edges.emplace_back(i * n2 + j, ip * n2 + j);
  return Graph(n1 * n2, std::move(edges));
}

}  // namespace spantree
