#pragma once

#include "spantree/bigint.hpp"
#include "spantree/graph.hpp"
#include "spantree/integer_matrix.hpp"

namespace spantree {

/// Laplacian Q = D - A: degrees on the diagonal, -1 for each edge.
/// Symmetric with zero row sums.
inline IntegerMatrix laplacian(const Graph& g) {
  IntegerMatrix q(g.n());
  auto deg = g.degrees();
  for (int v = 0; v < g.n(); ++v)
    q(v, v) = BigInt(deg[v]);
  for (const auto& [u, v] : g.edges()) {
    q(u, v) = BigInt(-1);
    q(v, u) = BigInt(-1);
  }
  return q;
}

/// Exact spanning-tree count: the matrix-tree cofactor obtained by deleting
/// row 0 and column 0 of the Laplacian, evaluated fraction-free. A single
/// vertex counts 1; disconnected graphs count 0. Cubic in n with integer
/// entries that grow with the count; intended for n <= 400 or so, where the
/// elimination stays at desk scale.
inline BigInt tau_exact(const Graph& g) {
  if (g.n() == 1)
    return BigInt(1);
  IntegerMatrix q = laplacian(g);
  IntegerMatrix minor(g.n() - 1);
  for (int i = 1; i < g.n(); ++i)
    for (int j = 1; j < g.n(); ++j)
      minor(i - 1, j - 1) = q(i, j);
  return det_fraction_free(std::move(minor));
}

}  // namespace spantree
