// Reads a graph file (edge list or graph6 by extension), prints its
// spectrum and both spanning-tree counts.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spantree/spantree.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <graph-file>\n", argv[0]);
    return 2;
  }
  std::ifstream in(argv[1], std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "cannot open %s\n", argv[1]);
    return 1;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  using namespace spantree;
  GraphFormat format = std::filesystem::path(argv[1]).extension() == ".g6"
                           ? GraphFormat::graph6
                           : GraphFormat::edge_list;
  Graph g = parse_graph(buffer.str(), format);

  std::printf("n = %d, m = %d, connected = %s\n", g.n(), g.m(),
              is_connected(g) ? "yes" : "no");
  Spectrum s = laplacian_spectrum(g);
  std::printf("spectrum:");
  for (double v : s.values)
    std::printf(" %.6f", v);
  std::printf("\n");
  std::printf("tau exact    = %s\n", tau_exact(g).to_string().c_str());
  std::printf("tau spectral = %.9g\n", tau_spectral(g));
  return 0;
}
