#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dyncon/graph.hpp"
#include "dyncon/range_index.hpp"
#include "dyncon/rooted_tree.hpp"

namespace dyncon {

enum class TourKind { DoubledGraph, Tree };

/// An occurrence sequence over positions 1..length().
///
/// The arc at position i joins seq(i) and seq(i + 1). A doubled-graph tour is
/// cyclic, so its arc at position length() wraps back to position 1; a tree
/// tour has no wrap arc. Every edge owns exactly two arcs, its cut positions.
class Tour {
 public:
  [[nodiscard]] TourKind kind() const { return kind_; }
  [[nodiscard]] std::size_t length() const { return seq_.size(); }
  [[nodiscard]] VertexId at(Position p) const { return seq_.at(static_cast<std::size_t>(p - 1)); }
  [[nodiscard]] const std::vector<VertexId>& sequence() const { return seq_; }
  /// Sorted positions of v (the set O(v)).
  [[nodiscard]] const std::vector<Position>& occurrences(VertexId v) const { return occ_.at(v); }
  /// Both cut positions of edge {a,b}; throws std::invalid_argument if the
  /// tour has no arc for it.
  [[nodiscard]] std::array<Position, 2> cut_positions(VertexId a, VertexId b) const;
  [[nodiscard]] bool has_edge(VertexId a, VertexId b) const {
    return cuts_.count(Edge(a, b).key()) != 0;
  }

 private:
  friend Tour build_doubled_tour(const Graph& g);
  friend Tour build_tree_tour(const RootedTree& tree);

  void index_occurrences(std::size_t n);

  TourKind kind_ = TourKind::DoubledGraph;
  std::vector<VertexId> seq_;
  std::vector<std::vector<Position>> occ_;
  std::unordered_map<std::uint64_t, std::array<Position, 2>> cuts_;
};

/// Euler circuit of g with every edge doubled (Hierholzer from vertex 1,
/// neighbours ascending). Requires g connected with at least one edge.
Tour build_doubled_tour(const Graph& g);

/// Euler tour of a rooted tree: visit v, then for each child c in ascending
/// order recurse into c and visit v again. Length 2n - 1.
Tour build_tree_tour(const RootedTree& tree);

/// Both orderings of every pair of distinct occurrences of each vertex.
std::vector<Point2D> occurrence_pair_points(const Tour& t);

/// Points (u_i, v_j) and (v_j, u_i) for every nontree edge {u,v} of g and
/// every pair of occurrences. Requires the tree to span g.
std::vector<Point2D> nontree_edge_points(const Tour& t, const RootedTree& tree, const Graph& g);

/// The points contributed by a single edge {u,v}.
std::vector<Point2D> edge_points(const Tour& t, VertexId u, VertexId v);

}  // namespace dyncon
