// Builds the 4x4 rook's graph three ways and prints how tight the product
// bounds are around the exact count.

#include <cstdio>

#include "spantree/spantree.hpp"

int main() {
  using namespace spantree;

  Graph k4 = generate(Family::complete, 4);
  Graph rook = cartesian_product(k4, k4);

  BigInt exact = tau_exact(rook);
  BigInt closed_form = rook_tau(4, 4);
  double spectral = tau_product_spectral(k4, k4);

  std::printf("tau(K4 x K4) exact       = %s\n", exact.to_string().c_str());
  std::printf("tau(K4 x K4) closed form = %s\n",
              closed_form.to_string().c_str());
  std::printf("tau(K4 x K4) spectral    = %.6e\n", spectral);

  BoundsReport r = bounds_report(k4, k4);
  std::printf("log bounds: %.6f <= %.6f <= %.6f\n", r.log_lower, r.log_tau,
              r.log_upper);
  std::printf("lower bound tight: %s  upper bound tight: %s\n",
              r.equality_lower_predicted ? "yes" : "no",
              r.equality_upper_predicted ? "yes" : "no");
  return 0;
}
