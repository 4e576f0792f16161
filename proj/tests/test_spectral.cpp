#include <catch2/catch.hpp>

#include <cmath>
#include <numeric>

#include "spantree/generators.hpp"
#include "spantree/graph.hpp"
#include "spantree/product.hpp"
#include "spantree/spanning.hpp"
#include "spantree/spectral.hpp"

using spantree::Family;
using spantree::Graph;
using spantree::Spectrum;
using spantree::generate;
using spantree::laplacian_spectrum;
using spantree::product_spectrum;
using spantree::tau_product_spectral;
using spantree::tau_spectral;

namespace {

void check_spectrum(const Spectrum& s, const std::vector<double>& expected,
                    double margin = 1e-9) {
  REQUIRE(s.values.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(s.values[i] == Approx(expected[i]).margin(margin));
}

}  // namespace

TEST_CASE("convergence errors carry the residual", "[spectral]") {
  spantree::convergence_error e(0.25, 100);
  CHECK(e.residual() == 0.25);
  CHECK(std::string(e.what()).find("100 sweeps") != std::string::npos);
}

TEST_CASE("documented spectra", "[spectral]") {
  check_spectrum(laplacian_spectrum(generate(Family::complete, 4)),
                 {0.0, 4.0, 4.0, 4.0});
  check_spectrum(laplacian_spectrum(generate(Family::path, 2)), {0.0, 2.0});
  check_spectrum(laplacian_spectrum(generate(Family::cycle, 4)),
                 {0.0, 2.0, 2.0, 4.0});
  check_spectrum(laplacian_spectrum(Graph(1, {})), {0.0});
}

TEST_CASE("spectrum invariants on random graphs", "[spectral]") {
  spantree::SplitMix64 rng(5);
  for (int round = 0; round < 25; ++round) {
    int n = 1 + static_cast<int>(rng.next_below(14));
    Graph g = spantree::random_graph(n, 0.5, rng.next());
    Spectrum s = laplacian_spectrum(g);
    REQUIRE(s.values.size() == static_cast<std::size_t>(n));
    CHECK(std::is_sorted(s.values.begin(), s.values.end()));
    CHECK(s.values.front() == 0.0);  // clamped structural zero
    double trace = std::accumulate(s.values.begin(), s.values.end(), 0.0);
    CHECK(trace == Approx(2.0 * g.m()).margin(std::max(s.tol, 1e-9)));
  }
}

TEST_CASE("documented tau_spectral values", "[spectral]") {
  CHECK(tau_spectral(generate(Family::complete, 3)) == Approx(3.0).epsilon(1e-12));
  CHECK(tau_spectral(generate(Family::cycle, 4)) == Approx(4.0).epsilon(1e-12));
  CHECK(tau_spectral(Graph(1, {})) == 1.0);
  Graph split(4, {{0, 1}, {2, 3}});
  CHECK(tau_spectral(split) == 0.0);  // exactly, via the zero clamp
}

TEST_CASE("tau_spectral tracks tau_exact", "[spectral]") {
  spantree::SplitMix64 rng(451);
  for (int round = 0; round < 20; ++round) {
    int n = 2 + static_cast<int>(rng.next_below(12));
    Graph g = spantree::random_graph(n, 0.6, rng.next());
    double exact = std::stod(spantree::tau_exact(g).to_string());
    double spectral = tau_spectral(g);
    CHECK(std::abs(spectral - exact) / std::max(1.0, exact) < 1e-9);
  }
  for (int n : {30, 42, 50}) {
    Graph g = spantree::random_graph(n, 0.5, 1000 + n);
    double exact = std::stod(spantree::tau_exact(g).to_string());
    double spectral = tau_spectral(g);
    CHECK(std::abs(spectral - exact) / std::max(1.0, exact) < 1e-9);
  }
}

TEST_CASE("tau_spectral survives near-zero algebraic connectivity", "[spectral]") {
  // Long paths and cycles have lambda_2 ~ 1/n^2, the worst case for the
  // relative accuracy of the eigenvalue product.
  CHECK(tau_spectral(generate(Family::cycle, 50)) == Approx(50.0).epsilon(1e-9));
  CHECK(tau_spectral(generate(Family::path, 50)) == Approx(1.0).epsilon(1e-9));
  CHECK(tau_spectral(generate(Family::cycle, 40)) == Approx(40.0).epsilon(1e-9));
}

TEST_CASE("documented product spectra", "[spectral]") {
  Spectrum k2{{0.0, 2.0}, 0.0};
  check_spectrum(product_spectrum(k2, k2), {0.0, 2.0, 2.0, 4.0});

  Spectrum k1{{0.0}, 0.0};
  Spectrum any{{0.0, 1.5, 3.0}, 1e-12};
  check_spectrum(product_spectrum(k1, any), {0.0, 1.5, 3.0});

  Spectrum k3{{0.0, 3.0, 3.0}, 0.0};
  check_spectrum(product_spectrum(k3, k2), {0.0, 2.0, 3.0, 3.0, 5.0, 5.0});
}

TEST_CASE("product spectrum matches the product's spectrum", "[spectral]") {
  spantree::SplitMix64 rng(860);
  for (int round = 0; round < 10; ++round) {
    int n1 = 2 + static_cast<int>(rng.next_below(6));
    int n2 = 2 + static_cast<int>(rng.next_below(6));
    Graph g1 = spantree::random_graph(n1, 0.5, rng.next());
    Graph g2 = spantree::random_graph(n2, 0.5, rng.next());
    Spectrum direct = laplacian_spectrum(spantree::cartesian_product(g1, g2));
    Spectrum paired =
        product_spectrum(laplacian_spectrum(g1), laplacian_spectrum(g2));
    REQUIRE(direct.values.size() == paired.values.size());
    for (std::size_t i = 0; i < direct.values.size(); ++i)
      CHECK(direct.values[i] == Approx(paired.values[i]).margin(1e-8));
  }
}

TEST_CASE("documented spectral product counts", "[spectral]") {
  Graph k2 = generate(Family::complete, 2);
  Graph k3 = generate(Family::complete, 3);
  CHECK(tau_product_spectral(k2, k2) == Approx(4.0).epsilon(1e-10));
  CHECK(tau_product_spectral(k3, k2) == Approx(75.0).epsilon(1e-10));

  Graph g = generate(Family::wheel, 7);
  CHECK(tau_product_spectral(g, Graph(1, {})) ==
        Approx(tau_spectral(g)).epsilon(1e-10));

  Graph split(4, {{0, 1}, {2, 3}});
  CHECK(tau_product_spectral(split, k3) == 0.0);
  CHECK(std::isinf(spantree::tau_product_spectral_log(split, k3)));
}

TEST_CASE("spectral product count matches the exact count", "[spectral]") {
  spantree::SplitMix64 rng(2718);
  int rounds = 0;
  while (rounds < 10) {
    int n1 = 2 + static_cast<int>(rng.next_below(9));
    int n2 = 2 + static_cast<int>(rng.next_below(9));
    Graph g1 = spantree::random_graph(n1, 0.6, rng.next());
    Graph g2 = spantree::random_graph(n2, 0.6, rng.next());
    if (!spantree::is_connected(g1) || !spantree::is_connected(g2))
      continue;
    ++rounds;
    double exact = std::stod(
        spantree::tau_exact(spantree::cartesian_product(g1, g2)).to_string());
    CHECK(tau_product_spectral(g1, g2) ==
          Approx(exact).epsilon(1e-9));
  }
}
