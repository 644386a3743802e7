#pragma once

#include <vector>

#include "dyncon/graph.hpp"

namespace dyncon {

/// Union of k edge-disjoint forests peeled off greedily: forest i is a
/// maximal spanning forest of g minus forests 1..i-1. Every cut of value at
/// most k in g has the same value in the subgraph.
struct Certificate {
  Graph subgraph;
  int k = 0;
  std::vector<std::vector<Edge>> forests;
};

/// Throws std::invalid_argument when k < 1.
Certificate sparse_certificate(const Graph& g, int k);

}  // namespace dyncon
