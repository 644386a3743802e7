#pragma once

#include <span>
#include <vector>

#include "dyncon/graph.hpp"
#include "dyncon/rooted_tree.hpp"

namespace dyncon {

/// Constant-time lowest common ancestor via range-minimum over the depth
/// sequence of the tree's Euler tour (sparse table, O(n log n) space), plus
/// pre/post numbers for O(1) ancestor tests.
class LcaIndex {
 public:
  explicit LcaIndex(const RootedTree& tree);

  [[nodiscard]] VertexId lca(VertexId u, VertexId v) const;
  /// True iff a is an ancestor of b or a == b.
  [[nodiscard]] bool is_ancestor(VertexId a, VertexId b) const;
  [[nodiscard]] const RootedTree& tree() const { return tree_; }

 private:
  void check(VertexId v) const;

  RootedTree tree_;
  std::vector<VertexId> euler_;
  std::vector<int> first_;
  std::vector<int> enter_;
  std::vector<int> leave_;
  std::vector<std::vector<int>> table_;  // indices into euler_ of min depth
  std::vector<int> log2_;
};

/// True iff w is an interior vertex of the tree path between u and v.
/// Throws std::invalid_argument when u == v.
bool is_vertex_cut_tree(const LcaIndex& idx, VertexId u, VertexId v, VertexId w);

/// True iff some vertex of S separates u and v. u and v must not be in S.
bool k_vertex_witness_tree(const LcaIndex& idx, VertexId u, VertexId v,
                           std::span<const VertexId> cut);

/// True iff some tree edge of S separates u and v: edge (x, parent(x)) does
/// so exactly when one of u, v lies in the subtree of x.
bool k_edge_witness_tree(const LcaIndex& idx, VertexId u, VertexId v, std::span<const Edge> cut);

}  // namespace dyncon
