#pragma once

#include <memory>
#include <set>
#include <span>

#include "dyncon/aux_graph.hpp"
#include "dyncon/euler_tour.hpp"
#include "dyncon/graph.hpp"
#include "dyncon/range_index.hpp"

namespace dyncon {

/// Decremental connectivity under edge deletions over the Euler tour of the
/// doubled graph.
///
/// Every live interval of H is a contiguous piece of the tour whose internal
/// arcs are all undeleted, and two intervals are adjacent iff some vertex
/// occurs in both; u and v are connected in g iff their intervals are
/// connected in H. Tour positions never move, so the occurrence-pair index
/// is static and deletion only ever splits intervals. The wrap arc between
/// the last and first positions is treated as permanently cut, hence H can
/// hold up to 2k + 1 intervals after k deletions.
///
/// Copies share the immutable point index.
class EdgeDecremental {
 public:
  /// Requires g connected with at least one edge.
  explicit EdgeDecremental(const Graph& g, BackendKind backend = BackendKind::Dfs);
  EdgeDecremental(const EdgeDecremental& other);
  EdgeDecremental& operator=(const EdgeDecremental& other);
  EdgeDecremental(EdgeDecremental&&) noexcept = default;
  EdgeDecremental& operator=(EdgeDecremental&&) noexcept = default;
  ~EdgeDecremental() = default;

  /// Throws std::invalid_argument if {u,v} is not an edge or already deleted.
  void delete_edge(VertexId u, VertexId v);
  [[nodiscard]] bool connected(VertexId u, VertexId v) const;
  [[nodiscard]] bool connected_all() const;

  /// Interval of H holding the first occurrence of v.
  [[nodiscard]] IntervalId representative(VertexId v) const;

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const Tour& tour() const { return *tour_; }
  [[nodiscard]] const AuxGraph& aux() const { return h_; }
  [[nodiscard]] const StaticPointSet& points() const { return *points_; }
  [[nodiscard]] std::size_t deletions() const { return deleted_.size(); }
  [[nodiscard]] bool is_deleted(VertexId u, VertexId v) const {
    return deleted_.count(Edge(u, v)) != 0;
  }

 private:
  void bind_edge_test();

  Graph graph_;
  std::shared_ptr<const Tour> tour_;
  std::shared_ptr<const StaticPointSet> points_;
  AuxGraph h_;
  std::unique_ptr<ConnectivityBackend> backend_;
  std::set<Edge> deleted_;
};

/// Decides whether removing `cut` separates u from v in g. Restricts to the
/// component of u, builds a sparse (|cut| + 1)-certificate of it, replays the
/// deletions that touch certificate edges and asks the Euler-tour structure.
/// Throws std::invalid_argument on u == v, non-edges or duplicates in cut.
bool k_edge_witness(const Graph& g, VertexId u, VertexId v, std::span<const Edge> cut);

}  // namespace dyncon
