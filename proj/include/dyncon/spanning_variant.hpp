#pragma once

#include <memory>
#include <optional>
#include <set>

#include "dyncon/aux_graph.hpp"
#include "dyncon/euler_tour.hpp"
#include "dyncon/graph.hpp"
#include "dyncon/range_index.hpp"
#include "dyncon/rooted_tree.hpp"

namespace dyncon {

/// Spanning tree of maximum degree at most one more than the optimum, by
/// Fürer–Raghavachari local improvement. Rooted at vertex 1.
/// Throws std::invalid_argument when g is disconnected.
RootedTree min_degree_spanning_tree(const Graph& g);

/// Breadth-first spanning tree from vertex 1.
RootedTree bfs_spanning_tree(const Graph& g);

struct TreeVariantOptions {
  /// Spanning tree to embed; defaults to min_degree_spanning_tree(g).
  std::optional<RootedTree> tree;
  /// Use bfs_spanning_tree when no tree is supplied.
  bool bfs_tree = false;
  BackendKind backend = BackendKind::Dfs;
};

/// Decremental connectivity over the Euler tour of a spanning tree.
///
/// Tree edges are arcs of the tour and are handled by splitting H exactly as
/// in EdgeDecremental. Nontree edges are deletable points (u_i, v_j) in a
/// dynamic range index; deleting one removes its points and retests every
/// H-edge whose box contained one of them, since such an edge may have lost
/// its only witness.
class TreeDecremental {
 public:
  explicit TreeDecremental(const Graph& g, TreeVariantOptions options = {});
  TreeDecremental(const TreeDecremental&) = delete;
  TreeDecremental& operator=(const TreeDecremental&) = delete;
  TreeDecremental(TreeDecremental&&) noexcept = default;
  TreeDecremental& operator=(TreeDecremental&&) noexcept = default;
  ~TreeDecremental() = default;

  void delete_edge(VertexId u, VertexId v);
  [[nodiscard]] bool connected(VertexId u, VertexId v) const;
  [[nodiscard]] bool connected_all() const;
  [[nodiscard]] IntervalId representative(VertexId v) const;

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const RootedTree& tree() const { return *tree_; }
  [[nodiscard]] const Tour& tour() const { return *tour_; }
  [[nodiscard]] const AuxGraph& aux() const { return *h_; }
  [[nodiscard]] const DynamicPointSet& points() const { return *points_; }
  [[nodiscard]] std::size_t initial_point_count() const { return initial_points_; }
  [[nodiscard]] std::size_t deletions() const { return deleted_.size(); }
  [[nodiscard]] bool is_deleted(VertexId u, VertexId v) const {
    return deleted_.count(Edge(u, v)) != 0;
  }
  [[nodiscard]] bool is_tree_edge(VertexId u, VertexId v) const {
    return tree_->graph().has_edge(u, v);
  }

 private:
  Graph graph_;
  std::unique_ptr<RootedTree> tree_;
  std::unique_ptr<Tour> tour_;
  std::unique_ptr<DynamicPointSet> points_;
  std::unique_ptr<AuxGraph> h_;
  std::unique_ptr<ConnectivityBackend> backend_;
  std::set<Edge> deleted_;
  std::size_t initial_points_ = 0;
};

}  // namespace dyncon
