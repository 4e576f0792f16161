#pragma once

// Umbrella header: exact and spectral spanning-tree counting for simple
// graphs and their Cartesian products, with sharp product bounds.

#include "spantree/bigint.hpp"
#include "spantree/bounds.hpp"
#include "spantree/generators.hpp"
#include "spantree/graph.hpp"
#include "spantree/graph_io.hpp"
#include "spantree/integer_matrix.hpp"
#include "spantree/oracle.hpp"
#include "spantree/product.hpp"
#include "spantree/spanning.hpp"
#include "spantree/spectral.hpp"
