#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "dyncon/graph.hpp"
#include "dyncon/range_index.hpp"

namespace dyncon {

/// An edge expressed in layout positions, a < b.
struct PositionEdge {
  Position a = 0;
  Position b = 0;
  friend bool operator==(const PositionEdge&, const PositionEdge&) = default;
  friend auto operator<=>(const PositionEdge&, const PositionEdge&) = default;
};

/// A bijection V -> 1..n together with the quantities derived from it.
///
/// Gap i sits between positions i and i + 1 (1 <= i < n). A hole is a gap
/// whose two neighbours are not adjacent in g. The crossing edges of vertex u
/// are the edges whose position span [a..b] contains the position of u:
/// its incident edges and every edge passing over it.
class LinearLayout {
 public:
  /// `order[i]` is the vertex at position i + 1. Throws std::invalid_argument
  /// unless order is a permutation of 1..n.
  LinearLayout(const Graph& g, std::vector<VertexId> order);

  [[nodiscard]] std::size_t n() const { return order_.size(); }
  [[nodiscard]] Position position(VertexId v) const { return pos_.at(v); }
  [[nodiscard]] VertexId vertex_at(Position p) const { return order_.at(static_cast<std::size_t>(p - 1)); }
  [[nodiscard]] const std::vector<VertexId>& order() const { return order_; }

  [[nodiscard]] const std::vector<Position>& holes() const { return holes_; }
  [[nodiscard]] bool is_hole(Position gap) const;
  /// Number of edges crossing gap i, indexed 1..n-1 (entry 0 unused).
  [[nodiscard]] const std::vector<int>& cutwidth_profile() const { return profile_; }
  [[nodiscard]] int cutwidth() const { return cutwidth_; }

  /// All edges as position pairs, sorted.
  [[nodiscard]] const std::vector<PositionEdge>& position_edges() const { return edges_; }
  [[nodiscard]] std::vector<PositionEdge> crossing_edges(VertexId u) const;
  [[nodiscard]] std::vector<PositionEdge> edges_crossing_gap(Position gap) const;
  /// Holes spanned by at least one crossing edge of u.
  [[nodiscard]] std::vector<Position> holes_of_vertex(VertexId u) const;

 private:
  std::vector<VertexId> order_;
  std::vector<Position> pos_;
  std::vector<PositionEdge> edges_;
  std::vector<Position> holes_;
  std::vector<char> hole_flag_;
  std::vector<int> profile_;
  int cutwidth_ = 0;
};

/// Concatenates the paths. Throws std::invalid_argument unless the paths are
/// vertex-disjoint, cover every vertex, and follow edges of g.
LinearLayout layout_from_path_cover(const Graph& g, const std::vector<std::vector<VertexId>>& paths);

/// Grows a path from the lowest-id uncovered vertex, repeatedly extending
/// either end to its lowest-id uncovered neighbour.
std::vector<std::vector<VertexId>> greedy_path_cover(const Graph& g);

/// Splits the layout's spine at its holes: holes + 1 covering paths.
std::vector<std::vector<VertexId>> spine_paths(const LinearLayout& layout);

/// Minimum-cutwidth layout by exhaustive search (n <= 10), ties broken by
/// fewer holes and then lexicographic order.
LinearLayout exhaustive_min_cutwidth_layout(const Graph& g);

/// Layout file: "layout <n>" then one line with the n vertices in order.
LinearLayout read_layout(std::istream& in, const Graph& g);
void write_layout(std::ostream& out, const LinearLayout& layout);

}  // namespace dyncon
