#pragma once

#include <vector>

#include "dyncon/graph.hpp"

namespace dyncon {

/// Spanning tree with a designated root. Children are kept in ascending id.
class RootedTree {
 public:
  /// Throws std::invalid_argument unless `tree` is a tree containing `root`.
  RootedTree(const Graph& tree, VertexId root);

  [[nodiscard]] std::size_t n() const { return graph_.n(); }
  [[nodiscard]] VertexId root() const { return root_; }
  [[nodiscard]] const Graph& graph() const { return graph_; }
  /// 0 for the root.
  [[nodiscard]] VertexId parent(VertexId v) const { return parent_.at(v); }
  [[nodiscard]] const std::vector<VertexId>& children(VertexId v) const { return children_.at(v); }
  [[nodiscard]] int depth(VertexId v) const { return depth_.at(v); }
  /// Vertices in post-order (children before parents, ascending child order).
  [[nodiscard]] const std::vector<VertexId>& postorder() const { return postorder_; }

  /// Throws std::invalid_argument unless every tree edge is an edge of g and
  /// the vertex sets agree.
  void require_spans(const Graph& g) const;

 private:
  Graph graph_;
  VertexId root_;
  std::vector<VertexId> parent_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<int> depth_;
  std::vector<VertexId> postorder_;
};

}  // namespace dyncon
