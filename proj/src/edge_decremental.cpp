#include "dyncon/edge_decremental.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dyncon/certificate.hpp"

namespace dyncon {

EdgeDecremental::EdgeDecremental(const Graph& g, BackendKind backend)
    : graph_(g), backend_(make_backend(backend)) {
  tour_ = std::make_shared<const Tour>(build_doubled_tour(g));
  auto pts = occurrence_pair_points(*tour_);
  points_ = std::make_shared<const StaticPointSet>(pts);
  bind_edge_test();
  h_.add_interval(1, static_cast<Position>(tour_->length()));
}

EdgeDecremental::EdgeDecremental(const EdgeDecremental& other)
    : graph_(other.graph_),
      tour_(other.tour_),
      points_(other.points_),
      h_(other.h_),
      backend_(other.backend_->clone()),
      deleted_(other.deleted_) {}

EdgeDecremental& EdgeDecremental::operator=(const EdgeDecremental& other) {
  if (this != &other) {
    EdgeDecremental copy(other);
    *this = std::move(copy);
  }
  return *this;
}

void EdgeDecremental::bind_edge_test() {
  // The shared index outlives every copy of h_ that captures it.
  h_ = AuxGraph([pts = points_](const Box& box) { return pts->box_nonempty(box); });
}

void EdgeDecremental::delete_edge(VertexId u, VertexId v) {
  if (!graph_.has_edge(u, v)) {
    throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(v) +
                                "} is not an edge");
  }
  if (!deleted_.insert(Edge(u, v)).second) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} already deleted");
  }
  for (Position cut : tour_->cut_positions(u, v)) {
    // The second cut operates on the partition left by the first; a cut at
    // the last position is the wrap arc and is a no-op.
    h_.split(cut, SplitGap::Between);
  }
}

IntervalId EdgeDecremental::representative(VertexId v) const {
  if (!graph_.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return h_.locate(tour_->occurrences(v).front());
}

bool EdgeDecremental::connected(VertexId u, VertexId v) const {
  const IntervalId a = representative(u);
  const IntervalId b = representative(v);
  return backend_->connected(h_, a, b);
}

bool EdgeDecremental::connected_all() const { return backend_->connected_all(h_); }

bool k_edge_witness(const Graph& g, VertexId u, VertexId v, std::span<const Edge> cut) {
  if (!g.contains(u) || !g.contains(v)) throw std::out_of_range("query vertex out of range");
  if (u == v) throw std::invalid_argument("witness query needs u != v");
  std::set<Edge> unique;
  for (const Edge& e : cut) {
    if (!g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} is not an edge");
    }
    if (!unique.insert(e).second) throw std::invalid_argument("duplicate edge in cut set");
  }

  // Relabel the component of u to 1..c so the tour structure sees a
  // connected graph.
  auto label = oracle_components(g, {}, {});
  if (label[u] != label[v]) return true;
  std::vector<VertexId> local(g.n() + 1, 0);
  VertexId next = 0;
  for (VertexId x = 1; x <= static_cast<VertexId>(g.n()); ++x) {
    if (label[x] == label[u]) local[x] = ++next;
  }
  Graph component(static_cast<std::size_t>(next));
  for (const Edge& e : g.edges()) {
    if (local[e.u] != 0) component.add_edge(local[e.u], local[e.v]);
  }

  // Order |S| + 1: a cut of value at most |S| in the certificate then has
  // the same value in g. Order |S| alone can turn a 3-edge-connected graph
  // into a tree.
  const int k = static_cast<int>(cut.size()) + 1;
  const Certificate cert = sparse_certificate(component, k);
  EdgeDecremental structure(cert.subgraph);
  for (const Edge& e : unique) {
    const VertexId a = local[e.u];
    const VertexId b = local[e.v];
    if (a == 0) continue;  // edge in another component
    // Cut edges outside the certificate leave it untouched.
    if (cert.subgraph.has_edge(a, b)) structure.delete_edge(a, b);
  }
  return !structure.connected(local[u], local[v]);
}

}  // namespace dyncon
