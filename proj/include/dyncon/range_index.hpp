#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace dyncon {

/// Tour or layout position. Positions are 1-based.
using Position = int;

struct Point2D {
  Position x = 0;
  Position y = 0;
  friend bool operator==(const Point2D&, const Point2D&) = default;
  friend auto operator<=>(const Point2D&, const Point2D&) = default;
};

/// Closed box [x_lo..x_hi] x [y_lo..y_hi].
struct Box {
  Position x_lo = 0;
  Position x_hi = 0;
  Position y_lo = 0;
  Position y_hi = 0;

  /// Throws std::invalid_argument when a lower bound exceeds its upper bound.
  void validate() const;
  [[nodiscard]] bool contains(const Point2D& p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
};

/// Static 2D emptiness structure: a layered range tree over the x-sorted
/// points whose per-level y lists are linked by fractional cascading, so a
/// query costs one binary search plus O(log r) constant-time descents.
/// Space is O(r log r).
class StaticPointSet {
 public:
  StaticPointSet() = default;
  explicit StaticPointSet(std::span<const Point2D> points);

  [[nodiscard]] bool box_nonempty(const Box& box) const;
  [[nodiscard]] std::size_t size() const { return xs_.size(); }

 private:
  bool query(int level, int lo, int hi, int ql, int qr, int idx, Position y_hi) const;

  std::vector<Position> xs_;  // x coordinates in sorted order
  // ys_[d] holds, for each level-d node [lo, hi), that node's y values sorted.
  std::vector<std::vector<Position>> ys_;
  // left_[d][i]: how many of the first i entries of level d (counted from the
  // start of the level) belong to the left child of their node.
  std::vector<std::vector<std::int32_t>> left_;
};

/// Deletable 2D emptiness structure: a binary-indexed tree over x ranks in
/// which every cell keeps the distinct y values of its points together with a
/// Fenwick tree of live multiplicities. O(log^2 r) per query and deletion.
class DynamicPointSet {
 public:
  DynamicPointSet() = default;
  explicit DynamicPointSet(std::span<const Point2D> points);

  [[nodiscard]] bool box_nonempty(const Box& box) const;
  /// Removes one instance of p; throws std::invalid_argument if p is not live.
  void delete_point(const Point2D& p);
  [[nodiscard]] std::size_t live_count() const { return live_; }
  [[nodiscard]] std::size_t multiplicity(const Point2D& p) const;

 private:
  struct Cell {
    std::vector<Position> ys;
    std::vector<std::int32_t> fenwick;
    [[nodiscard]] std::int64_t prefix(std::size_t count) const;
    void add(std::size_t slot, std::int32_t delta);
    [[nodiscard]] std::int64_t count_range(Position lo, Position hi) const;
  };

  [[nodiscard]] std::int64_t prefix_count(std::size_t rank, Position y_lo, Position y_hi) const;
  static std::uint64_t key(const Point2D& p) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
           static_cast<std::uint32_t>(p.y);
  }

  std::vector<Position> distinct_x_;
  std::vector<Cell> cells_;  // 1-based BIT cells
  std::unordered_map<std::uint64_t, std::size_t> counts_;
  std::size_t live_ = 0;
};

}  // namespace dyncon
