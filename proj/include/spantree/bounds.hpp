#pragma once

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "spantree/bigint.hpp"
#include "spantree/graph.hpp"
#include "spantree/product.hpp"
#include "spantree/spanning.hpp"

namespace spantree {

/// Slack used when comparing log-domain quantities; a bound is "tight" when
/// the observed gap is at most this.
inline constexpr double kLogSlack = 1e-9;

inline constexpr double kNegativeInfinity =
    -std::numeric_limits<double>::infinity();

/// Gap between two log-domain values; two -infinity markers (both sides
/// tau = 0) gap to zero rather than NaN.
inline double log_gap(double a, double b) {
  if (std::isinf(a) && std::isinf(b) && a < 0 && b < 0)
    return 0.0;
  return std::abs(a - b);
}

namespace detail {

inline void require_bound_order(const Graph& g1, const Graph& g2) {
  if (g1.n() < 2 || g2.n() < 2)
    throw std::domain_error(
        "product bounds require both factors to have n >= 2");
}

}  // namespace detail

/// Natural log of the lower bound
///   2^((n1-1)(n2-1)) / (n1 n2) * (tau1 n1)^((n2+1)/2) * (tau2 n2)^((n1+1)/2).
/// Exact tau values enter through their high-precision logs. Returns the
/// -infinity marker when either factor has no spanning tree, which is also
/// the bound's equality case for disconnected factors.
inline double lower_bound_log(const Graph& g1, const Graph& g2) {
  detail::require_bound_order(g1, g2);
  const BigInt tau1 = tau_exact(g1);
  const BigInt tau2 = tau_exact(g2);
  if (tau1.is_zero() || tau2.is_zero())
    return kNegativeInfinity;
  const double n1 = g1.n();
  const double n2 = g2.n();
  return (n1 - 1.0) * (n2 - 1.0) * std::numbers::ln2 - std::log(n1 * n2) +
         0.5 * (n2 + 1.0) * (tau1.log_natural() + std::log(n1)) +
         0.5 * (n1 + 1.0) * (tau2.log_natural() + std::log(n2));
}

/// Natural log of the upper bound
///   tau1 tau2 [2 m1/(n1-1) + 2 m2/(n2-1)]^((n1-1)(n2-1)).
inline double upper_bound_log(const Graph& g1, const Graph& g2) {
  detail::require_bound_order(g1, g2);
  const BigInt tau1 = tau_exact(g1);
  const BigInt tau2 = tau_exact(g2);
  if (tau1.is_zero() || tau2.is_zero())
    return kNegativeInfinity;
  const double n1 = g1.n();
  const double n2 = g2.n();
  const double mean_degree_sum =
      2.0 * g1.m() / (n1 - 1.0) + 2.0 * g2.m() / (n2 - 1.0);
  return tau1.log_natural() + tau2.log_natural() +
         (n1 - 1.0) * (n2 - 1.0) * std::log(mean_degree_sum);
}

/// Structural equality characterization of the lower bound: tight iff a
/// factor is disconnected, or both factors are complete of the same order.
inline bool equality_lower(const Graph& g1, const Graph& g2) {
  detail::require_bound_order(g1, g2);
  if (!is_connected(g1) || !is_connected(g2))
    return true;
  return g1.n() == g2.n() && is_complete(g1) && is_complete(g2);
}

/// Structural equality characterization of the upper bound: tight iff a
/// factor is disconnected, or both factors are complete.
inline bool equality_upper(const Graph& g1, const Graph& g2) {
  detail::require_bound_order(g1, g2);
  if (!is_connected(g1) || !is_connected(g2))
    return true;
  return is_complete(g1) && is_complete(g2);
}

/// Strict bracket for products of trees of orders n1, n2 >= 3:
///   2^((n1-1)(n2-1)) n1^((n2-1)/2) n2^((n1-1)/2) < tau < 2^(2(n1-1)(n2-1)).
/// Returned as (log lower, log upper).
inline std::pair<double, double> tree_bounds_log(int n1, int n2) {
  if (n1 < 3 || n2 < 3)
    throw std::domain_error("tree bounds require tree orders n >= 3");
  const double e = (n1 - 1.0) * (n2 - 1.0);
  const double lower = e * std::numbers::ln2 +
                       0.5 * (n2 - 1.0) * std::log(static_cast<double>(n1)) +
                       0.5 * (n1 - 1.0) * std::log(static_cast<double>(n2));
  const double upper = 2.0 * e * std::numbers::ln2;
  return {lower, upper};
}

/// Exact spanning-tree count of the rook's graph K_n1 x K_n2:
///   n1^(n1-2) * n2^(n2-2) * (n1+n2)^((n1-1)(n2-1)).
/// The n = 1 factor contributes 1 (K_1 is the product identity).
inline BigInt rook_tau(int n1, int n2) {
  if (n1 < 1 || n2 < 1)
    throw std::domain_error("rook_tau requires n1, n2 >= 1");
  auto cayley = [](int n) {
    return n == 1 ? BigInt(1)
                  : BigInt::pow(BigInt(n), static_cast<unsigned long long>(n - 2));
  };
  const unsigned long long cross =
      static_cast<unsigned long long>(n1 - 1) *
      static_cast<unsigned long long>(n2 - 1);
  return cayley(n1) * cayley(n2) * BigInt::pow(BigInt(n1 + n2), cross);
}

/// Everything the bounds say about one factor pair: the exact count, both
/// bounds in log domain, the structural equality predictions, and whether
/// the sandwich holds numerically.
struct BoundsReport {
  BigInt tau_exact_product;
  double log_tau;    // -infinity marker when tau = 0
  double log_lower;
  double log_upper;
  bool equality_lower_predicted;
  bool equality_upper_predicted;
  bool sandwich_ok;
};

inline BoundsReport bounds_report(const Graph& g1, const Graph& g2) {
  detail::require_bound_order(g1, g2);
  BoundsReport r;
  r.tau_exact_product = tau_exact(cartesian_product(g1, g2));
  r.log_tau = r.tau_exact_product.log_natural();
  r.log_lower = lower_bound_log(g1, g2);
  r.log_upper = upper_bound_log(g1, g2);
  r.equality_lower_predicted = equality_lower(g1, g2);
  r.equality_upper_predicted = equality_upper(g1, g2);
  r.sandwich_ok = r.log_lower <= r.log_tau + kLogSlack &&
                  r.log_tau <= r.log_upper + kLogSlack;
  assert(r.equality_lower_predicted == (log_gap(r.log_tau, r.log_lower) <= kLogSlack));
  assert(r.equality_upper_predicted == (log_gap(r.log_tau, r.log_upper) <= kLogSlack));
  return r;
}

}  // namespace spantree
