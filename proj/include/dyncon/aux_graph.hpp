#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "dyncon/range_index.hpp"
#include "dyncon/union_find.hpp"

namespace dyncon {

using IntervalId = int;

/// Box-emptiness predicate deciding whether two intervals are H-adjacent.
using EdgeTest = std::function<bool(const Box&)>;

struct IntervalVertex {
  Position lo = 0;
  Position hi = 0;
  bool alive = true;
  std::set<IntervalId> adjacency;
};

enum class SplitGap {
  /// Cut the arc between `at` and `at + 1`.
  Between,
  /// Remove position `at` itself.
  RemovePosition,
};

struct SplitResult {
  std::optional<IntervalId> left;
  std::optional<IntervalId> right;
  /// False when the split was degenerate and nothing changed.
  bool changed = false;
};

/// The auxiliary graph H: live intervals partition a subset of the position
/// axis, and two intervals are adjacent iff the edge test reports their box
/// nonempty. Dead intervals are tombstoned so ids stay stable.
class AuxGraph {
 public:
  AuxGraph() = default;
  explicit AuxGraph(EdgeTest test) : test_(std::move(test)) {}

  /// Adds a live interval without any edges. The interval must not overlap
  /// a live interval.
  IntervalId add_interval(Position lo, Position hi);
  /// Tests every pair of live intervals and inserts the edges found.
  void seed_all_edges();

  /// Live interval containing pos; throws std::out_of_range when uncovered.
  [[nodiscard]] IntervalId locate(Position pos) const;
  [[nodiscard]] std::optional<IntervalId> try_locate(Position pos) const;

  SplitResult split(Position at, SplitGap gap);

  /// Removes a live interval and its edges entirely.
  void remove_interval(IntervalId id);

  /// Retests a stored edge and drops it if its box has become empty.
  /// Returns true when the edge was dropped.
  bool retest_edge(IntervalId a, IntervalId b);

  [[nodiscard]] bool edge_test(IntervalId a, IntervalId b) const;
  [[nodiscard]] bool adjacent(IntervalId a, IntervalId b) const;

  [[nodiscard]] const IntervalVertex& vertex(IntervalId id) const { return vertices_.at(id); }
  [[nodiscard]] bool alive(IntervalId id) const {
    return id >= 0 && static_cast<std::size_t>(id) < vertices_.size() && vertices_[id].alive;
  }
  [[nodiscard]] std::size_t live_count() const { return by_lo_.size(); }
  [[nodiscard]] std::vector<IntervalId> live_ids() const;
  [[nodiscard]] std::size_t max_degree() const;
  [[nodiscard]] std::size_t edge_count() const;
  /// Incremented by every mutation.
  [[nodiscard]] std::uint64_t version() const { return version_; }

  /// Depth-first search over live intervals.
  [[nodiscard]] bool connected_dfs(IntervalId a, IntervalId b) const;
  [[nodiscard]] bool connected_all_dfs() const;
  /// Component label of every interval id (dead ones get -1).
  [[nodiscard]] std::vector<int> component_labels() const;

 private:
  void require_alive(IntervalId id) const;
  void link(IntervalId a, IntervalId b);
  void kill(IntervalId id);

  EdgeTest test_;
  std::vector<IntervalVertex> vertices_;
  std::map<Position, IntervalId> by_lo_;
  std::uint64_t version_ = 0;
};

/// Strategy answering connectivity between live intervals of an AuxGraph.
class ConnectivityBackend {
 public:
  virtual ~ConnectivityBackend() = default;
  [[nodiscard]] virtual bool connected(const AuxGraph& h, IntervalId a, IntervalId b) const = 0;
  [[nodiscard]] virtual bool connected_all(const AuxGraph& h) const = 0;
  [[nodiscard]] virtual std::unique_ptr<ConnectivityBackend> clone() const = 0;
};

enum class BackendKind {
  /// Depth-first search on demand, O(|H|^2) per query.
  Dfs,
  /// Union-find snapshot rebuilt lazily after each mutation of H; repeated
  /// queries between mutations cost O(log |H|).
  UnionFindSnapshot,
};

std::unique_ptr<ConnectivityBackend> make_backend(BackendKind kind);

class DfsBackend final : public ConnectivityBackend {
 public:
  [[nodiscard]] bool connected(const AuxGraph& h, IntervalId a, IntervalId b) const override;
  [[nodiscard]] bool connected_all(const AuxGraph& h) const override;
  [[nodiscard]] std::unique_ptr<ConnectivityBackend> clone() const override;
};

class UnionFindSnapshotBackend final : public ConnectivityBackend {
 public:
  [[nodiscard]] bool connected(const AuxGraph& h, IntervalId a, IntervalId b) const override;
  [[nodiscard]] bool connected_all(const AuxGraph& h) const override;
  [[nodiscard]] std::unique_ptr<ConnectivityBackend> clone() const override;

 private:
  void refresh(const AuxGraph& h) const;

  mutable const AuxGraph* source_ = nullptr;
  mutable std::uint64_t version_ = 0;
  mutable bool valid_ = false;
  mutable WorstCaseUnionFind uf_;
  mutable std::size_t components_ = 0;
};

}  // namespace dyncon
