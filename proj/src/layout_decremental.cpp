#include "dyncon/layout_decremental.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace dyncon {

namespace {

std::vector<std::pair<Position, Position>> hole_free_blocks(const LinearLayout& layout) {
  std::vector<std::pair<Position, Position>> blocks;
  const auto n = static_cast<Position>(layout.n());
  Position start = 1;
  for (Position h : layout.holes()) {
    blocks.emplace_back(start, h);
    start = h + 1;
  }
  if (n > 0) blocks.emplace_back(start, n);
  return blocks;
}

}  // namespace

LayoutDecremental::LayoutDecremental(const Graph& g, const LinearLayout& layout,
                                     LayoutDecrementalOptions options)
    : backend_(make_backend(options.backend)), lazy_(options.lazy_holes) {
  if (layout.n() != g.n()) throw std::invalid_argument("layout does not belong to the graph");
  std::vector<Point2D> pts;
  pts.reserve(2 * g.m());
  for (const Edge& e : g.edges()) {
    const Position a = layout.position(e.u);
    const Position b = layout.position(e.v);
    pts.push_back({a, b});
    pts.push_back({b, a});
  }
  std::vector<PositionEdge> expected;
  for (const Edge& e : g.edges()) {
    const Position a = layout.position(e.u), b = layout.position(e.v);
    expected.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(expected.begin(), expected.end());
  if (expected != layout.position_edges()) throw std::invalid_argument("layout does not belong to the graph");

  layout_ = std::make_shared<const LinearLayout>(layout);
  points_ = std::make_shared<const StaticPointSet>(pts);
  bind_edge_test();

  const auto blocks = hole_free_blocks(layout);
  if (!lazy_) {
    for (const auto& [lo, hi] : blocks) h_.add_interval(lo, hi);
  } else {
    // Merge each block into the running interval while some edge joins them;
    // the merged interval then stays internally connected.
    Position run_lo = 0, run_hi = 0;
    for (const auto& [lo, hi] : blocks) {
      if (run_lo != 0 && points_->box_nonempty(Box{run_lo, run_hi, lo, hi})) {
        run_hi = hi;
        continue;
      }
      if (run_lo != 0) h_.add_interval(run_lo, run_hi);
      run_lo = lo;
      run_hi = hi;
    }
    if (run_lo != 0) h_.add_interval(run_lo, run_hi);
  }
  h_.seed_all_edges();
}

LayoutDecremental::LayoutDecremental(const LayoutDecremental& other)
    : layout_(other.layout_),
      points_(other.points_),
      h_(other.h_),
      backend_(other.backend_->clone()),
      deleted_(other.deleted_),
      lazy_(other.lazy_) {}

LayoutDecremental& LayoutDecremental::operator=(const LayoutDecremental& other) {
  if (this != &other) {
    LayoutDecremental copy(other);
    *this = std::move(copy);
  }
  return *this;
}

void LayoutDecremental::bind_edge_test() {
  h_ = AuxGraph([pts = points_](const Box& box) { return pts->box_nonempty(box); });
}

void LayoutDecremental::require_live(VertexId v) const {
  if (v < 1 || static_cast<std::size_t>(v) > layout_->n()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  if (deleted_.count(v)) throw DeletedVertexError(v);
}

void LayoutDecremental::split_at_holes(IntervalId id) {
  const Position lo = h_.vertex(id).lo;
  const Position hi = h_.vertex(id).hi;
  const auto& holes = layout_->holes();
  for (auto it = std::lower_bound(holes.begin(), holes.end(), lo); it != holes.end() && *it < hi; ++it) {
    h_.split(*it, SplitGap::Between);
  }
}

void LayoutDecremental::delete_vertex(VertexId v) {
  require_live(v);
  deleted_.insert(v);
  const SplitResult r = h_.split(layout_->position(v), SplitGap::RemovePosition);
  if (lazy_) {
    if (r.left) split_at_holes(*r.left);
    if (r.right) split_at_holes(*r.right);
  }
}

bool LayoutDecremental::connected(VertexId u, VertexId v) const {
  require_live(u);
  require_live(v);
  return backend_->connected(h_, h_.locate(layout_->position(u)), h_.locate(layout_->position(v)));
}

bool LayoutDecremental::connected_all() const { return backend_->connected_all(h_); }

}  // namespace dyncon
