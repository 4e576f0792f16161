#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "spantree/bigint.hpp"

namespace spantree {

/// Dense square matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
  explicit IntegerMatrix(int order) : order_(order) {
    if (order_ < 1)
      throw std::invalid_argument("IntegerMatrix: order must be positive");
    entries_.resize(static_cast<std::size_t>(order_) * order_);
  }

  static IntegerMatrix identity(int order) {
    IntegerMatrix m(order);
    for (int i = 0; i < order; ++i)
      m(i, i) = BigInt(1);
    return m;
  }

  int order() const { return order_; }

  BigInt& operator()(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * order_ + j];
  }
  const BigInt& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * order_ + j];
  }

  bool operator==(const IntegerMatrix& other) const = default;

private:
  int order_;
  std::vector<BigInt> entries_;
};

/// Exact determinant by Bareiss fraction-free elimination. Every interior
/// division divides by the previous pivot and is exact, so the whole
/// computation stays in the integers. A zero pivot is repaired by a row
/// swap (sign tracked); if a column has no nonzero pivot the determinant
/// is zero.
inline BigInt det_fraction_free(IntegerMatrix a) {
  const int n = a.order();
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      int pivot_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!a(r, k).is_zero()) {
          pivot_row = r;
          break;
        }
      }
      if (pivot_row < 0)
        return BigInt(0);
      for (int j = k; j < n; ++j)
        std::swap(a(k, j), a(pivot_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = BigInt(0);
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace spantree
