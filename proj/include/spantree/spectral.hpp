#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

/// Laplacian eigenvalues sorted ascending, plus `tol`, a conservative bound
/// on the absolute error of each value. For a valid spectrum the smallest
/// value is within tol of 0 and the sum is within tol-scale of 2m.
struct Spectrum {
  std::vector<double> values;
  double tol = 0.0;
};

class convergence_error : public std::runtime_error {
public:
  convergence_error(double residual, int sweeps)
      : std::runtime_error("jacobi eigensolver failed to converge after " +
                           std::to_string(sweeps) +
                           " sweeps, off-diagonal residual " +
                           std::to_string(residual)),
        residual_(residual) {}

  double residual() const { return residual_; }

private:
  double residual_;
};

namespace detail {

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelTol = 1e-12;
inline constexpr double kEigenvalueZeroClamp = 1e-9;

inline double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      sum += 2.0 * a[static_cast<std::size_t>(i) * n + j] *
             a[static_cast<std::size_t>(i) * n + j];
  return std::sqrt(sum);
}

inline double frobenius_norm(const std::vector<double>& a) {
  double sum = 0.0;
  for (double x : a)
    sum += x * x;
  return std::sqrt(sum);
}

/// Cyclic Jacobi on a dense symmetric matrix (row-major, overwritten).
/// Each rotation zeroes one off-diagonal pair via the atan2 angle form,
/// which has no overflow corner cases. Sweeps run until the off-diagonal
/// Frobenius norm drops to 1e-12 of the initial full Frobenius norm, then
/// one polishing sweep squares the residual down to roundoff. Returns the
/// achieved off-diagonal residual.
inline double jacobi_diagonalize(std::vector<double>& a, int n) {
  const double initial_norm = frobenius_norm(a);
  const double threshold = kJacobiRelTol * initial_norm;
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  bool polished = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = off_diagonal_norm(a, n);
    if (off <= threshold) {
      if (polished || off == 0.0)
        return off;
      polished = true;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0)
          continue;
        const double theta = 0.5 * std::atan2(2.0 * apq, at(q, q) - at(p, p));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const double app = at(p, p);
        const double aqq = at(q, q);
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q)
            continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        at(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  const double off = off_diagonal_norm(a, n);
  if (off <= threshold)
    return off;
  throw convergence_error(off, kJacobiMaxSweeps);
}

}  // namespace detail

/// Eigenvalues of the Laplacian Q(g), ascending. Values within 1e-9 of zero
/// are clamped to exactly 0, which separates the structural zero (and the
/// extra zeros of disconnected graphs) from numerical noise.
inline Spectrum laplacian_spectrum(const Graph& g) {
  const int n = g.n();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  auto deg = g.degrees();
  for (int v = 0; v < n; ++v)
    a[static_cast<std::size_t>(v) * n + v] = static_cast<double>(deg[v]);
  for (const auto& [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u) * n + v] = -1.0;
    a[static_cast<std::size_t>(v) * n + u] = -1.0;
  }
  const double initial_norm = detail::frobenius_norm(a);
  const double residual = detail::jacobi_diagonalize(a, n);

  Spectrum s;
  s.values.resize(n);
  for (int v = 0; v < n; ++v)
    s.values[v] = a[static_cast<std::size_t>(v) * n + v];
  for (double& v : s.values)
    if (std::abs(v) <= detail::kEigenvalueZeroClamp)
      v = 0.0;
  std::sort(s.values.begin(), s.values.end());
  s.tol = residual + 1e-14 * n * std::max(1.0, initial_norm);
  return s;
}

/// Spectral spanning-tree count (1/n) * lambda_2 * ... * lambda_n over the
/// clamped spectrum; exactly 0 for disconnected graphs, 1 for the single
/// vertex.
inline double tau_spectral(const Graph& g) {
  if (g.n() == 1)
    return 1.0;
  Spectrum s = laplacian_spectrum(g);
  double product = 1.0;
  for (std::size_t i = 1; i < s.values.size(); ++i)
    product *= s.values[i];
  return product / g.n();
}

/// All pairwise sums of two Laplacian spectra, sorted ascending: the
/// spectrum of the Cartesian product of the underlying graphs.
inline Spectrum product_spectrum(const Spectrum& a, const Spectrum& b) {
  Spectrum r;
  r.values.reserve(a.values.size() * b.values.size());
  for (double x : a.values)
    for (double y : b.values)
      r.values.push_back(x + y);
  std::sort(r.values.begin(), r.values.end());
  r.tol = a.tol + b.tol;
  return r;
}

/// Natural log of tau(G1 x G2) by the product formula
/// tau1 * tau2 * prod_{i>=2} prod_{j>=2} (lambda_i + mu_j), accumulated as
/// a sum of logarithms; -infinity when either factor is disconnected.
inline double tau_product_spectral_log(const Graph& g1, const Graph& g2) {
  const Spectrum s1 = laplacian_spectrum(g1);
  const Spectrum s2 = laplacian_spectrum(g2);
  const double neg_inf = -std::numeric_limits<double>::infinity();

  auto log_tau_of = [&](const Spectrum& s, int n) {
    double sum = 0.0;
    for (std::size_t i = 1; i < s.values.size(); ++i) {
      if (s.values[i] == 0.0)
        return neg_inf;
      sum += std::log(s.values[i]);
    }
    return sum - std::log(static_cast<double>(n));
  };

  double total = log_tau_of(s1, g1.n()) + log_tau_of(s2, g2.n());
  if (std::isinf(total))
    return neg_inf;
  for (std::size_t i = 1; i < s1.values.size(); ++i)
    for (std::size_t j = 1; j < s2.values.size(); ++j)
      total += std::log(s1.values[i] + s2.values[j]);
  return total;
}

/// Exponentiated form of tau_product_spectral_log: 0 for disconnected
/// factors, +infinity once the count leaves double range (use the log form
/// beyond that).
inline double tau_product_spectral(const Graph& g1, const Graph& g2) {
  return std::exp(tau_product_spectral_log(g1, g2));
}

}  // namespace spantree
