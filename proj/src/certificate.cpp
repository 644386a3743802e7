#include "dyncon/certificate.hpp"

#include <stdexcept>

namespace dyncon {

Certificate sparse_certificate(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("certificate order must be >= 1");
  Certificate cert;
  cert.k = k;
  Graph remaining = g;
  std::vector<Edge> kept;
  for (int round = 0; round < k && remaining.m() > 0; ++round) {
    auto forest = spanning_forest(remaining);
    std::vector<char> taken(remaining.m(), 0);
    for (const Edge& e : forest) taken[remaining.edge_index(e.u, e.v)] = 1;
    std::vector<Edge> rest;
    rest.reserve(remaining.m() - forest.size());
    for (std::size_t i = 0; i < remaining.m(); ++i) {
      if (!taken[i]) rest.push_back(remaining.edges()[i]);
    }
    kept.insert(kept.end(), forest.begin(), forest.end());
    cert.forests.push_back(std::move(forest));
    remaining = Graph::from_edges(g.n(), rest);
  }
  cert.subgraph = Graph::from_edges(g.n(), kept);
  return cert;
}

}  // namespace dyncon
