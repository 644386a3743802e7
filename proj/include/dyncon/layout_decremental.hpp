#pragma once

#include <memory>
#include <set>
#include <stdexcept>

#include "dyncon/aux_graph.hpp"
#include "dyncon/graph.hpp"
#include "dyncon/layout.hpp"
#include "dyncon/range_index.hpp"

namespace dyncon {

/// Raised when a query names a vertex that has already been deleted.
class DeletedVertexError : public std::invalid_argument {
 public:
  explicit DeletedVertexError(VertexId v)
      : std::invalid_argument("vertex " + std::to_string(v) + " has been deleted"), vertex_(v) {}
  [[nodiscard]] VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

struct LayoutDecrementalOptions {
  /// Start from a coarser partition and split at holes only once a deletion
  /// lands in an interval that spans them.
  bool lazy_holes = false;
  BackendKind backend = BackendKind::Dfs;
};

/// Decremental connectivity under vertex deletions over a fixed linear
/// layout. H starts as the maximal hole-free intervals of the layout; every
/// edge is stored as both (pos u, pos v) and (pos v, pos u), and deleting u
/// removes its position from its interval. Edges touching a deleted vertex
/// never fall inside a box of live intervals, so the point set stays static.
///
/// H keeps degree at most 2 * cutwidth, and after k deletions holds at most
/// k + |holes| + 1 intervals.
class LayoutDecremental {
 public:
  /// Throws std::invalid_argument if the layout does not belong to g.
  LayoutDecremental(const Graph& g, const LinearLayout& layout, LayoutDecrementalOptions options = {});
  LayoutDecremental(const LayoutDecremental& other);
  LayoutDecremental& operator=(const LayoutDecremental& other);
  LayoutDecremental(LayoutDecremental&&) noexcept = default;
  LayoutDecremental& operator=(LayoutDecremental&&) noexcept = default;
  ~LayoutDecremental() = default;

  /// Throws DeletedVertexError if v is already deleted.
  void delete_vertex(VertexId v);
  /// Throws DeletedVertexError for a deleted endpoint.
  [[nodiscard]] bool connected(VertexId u, VertexId v) const;
  /// True iff the live vertices induce a connected graph.
  [[nodiscard]] bool connected_all() const;

  [[nodiscard]] bool is_deleted(VertexId v) const { return deleted_.count(v) != 0; }
  [[nodiscard]] std::size_t deletions() const { return deleted_.size(); }
  [[nodiscard]] const LinearLayout& layout() const { return *layout_; }
  [[nodiscard]] const AuxGraph& aux() const { return h_; }
  [[nodiscard]] const StaticPointSet& points() const { return *points_; }
  [[nodiscard]] bool lazy_holes() const { return lazy_; }

 private:
  void bind_edge_test();
  void require_live(VertexId v) const;
  void split_at_holes(IntervalId id);

  std::shared_ptr<const LinearLayout> layout_;
  std::shared_ptr<const StaticPointSet> points_;
  AuxGraph h_;
  std::unique_ptr<ConnectivityBackend> backend_;
  std::set<VertexId> deleted_;
  bool lazy_ = false;
};

}  // namespace dyncon
