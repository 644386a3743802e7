#include "dyncon/range_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dyncon {

void Box::validate() const {
  if (x_lo > x_hi || y_lo > y_hi) {
    throw std::invalid_argument("inverted box bounds [" + std::to_string(x_lo) + ".." +
                                std::to_string(x_hi) + "]x[" + std::to_string(y_lo) + ".." +
                                std::to_string(y_hi) + "]");
  }
}

// ---------------------------------------------------------------------------
// StaticPointSet

StaticPointSet::StaticPointSet(std::span<const Point2D> points) {
  std::vector<Point2D> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  const int r = static_cast<int>(sorted.size());
  xs_.resize(r);
  for (int i = 0; i < r; ++i) xs_[i] = sorted[i].x;
  if (r == 0) return;

  int levels = 1;
  for (int s = r; s > 1; s = (s + 1) / 2) ++levels;
  ys_.assign(levels, std::vector<Position>(r));
  left_.assign(levels, std::vector<std::int32_t>(r + 1, 0));
  std::vector<std::vector<char>> from_left(levels, std::vector<char>(r, 0));

  // Iterative post-order build so deep inputs cannot overflow the stack.
  struct Frame {
    int level, lo, hi;
    bool expanded;
  };
  std::vector<Frame> stack{{0, 0, r, false}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.hi - f.lo == 1) {
      ys_[f.level][f.lo] = sorted[f.lo].y;
      continue;
    }
    const int mid = (f.lo + f.hi) / 2;
    if (!f.expanded) {
      stack.push_back({f.level, f.lo, f.hi, true});
      stack.push_back({f.level + 1, f.lo, mid, false});
      stack.push_back({f.level + 1, mid, f.hi, false});
      continue;
    }
    const auto& child = ys_[f.level + 1];
    auto& out = ys_[f.level];
    int i = f.lo, j = mid, k = f.lo;
    while (i < mid || j < f.hi) {
      if (j >= f.hi || (i < mid && child[i] <= child[j])) {
        out[k] = child[i++];
        from_left[f.level][k] = 1;
      } else {
        out[k] = child[j++];
      }
      ++k;
    }
  }
  for (int d = 0; d < levels; ++d) {
    for (int i = 0; i < r; ++i) left_[d][i + 1] = left_[d][i] + from_left[d][i];
  }
}

bool StaticPointSet::query(int level, int lo, int hi, int ql, int qr, int idx,
                           Position y_hi) const {
  if (qr <= lo || hi <= ql || idx >= hi) return false;
  if (ql <= lo && hi <= qr) return ys_[level][idx] <= y_hi;
  const int mid = (lo + hi) / 2;
  const int lcount = left_[level][idx] - left_[level][lo];
  const int left_idx = lo + lcount;
  const int right_idx = mid + (idx - lo - lcount);
  return query(level + 1, lo, mid, ql, qr, left_idx, y_hi) ||
         query(level + 1, mid, hi, ql, qr, right_idx, y_hi);
}

bool StaticPointSet::box_nonempty(const Box& box) const {
  box.validate();
  if (xs_.empty()) return false;
  const int ql = static_cast<int>(std::lower_bound(xs_.begin(), xs_.end(), box.x_lo) - xs_.begin());
  const int qr = static_cast<int>(std::upper_bound(xs_.begin(), xs_.end(), box.x_hi) - xs_.begin());
  if (ql >= qr) return false;
  const auto& root = ys_[0];
  const int idx = static_cast<int>(std::lower_bound(root.begin(), root.end(), box.y_lo) - root.begin());
  return query(0, 0, static_cast<int>(xs_.size()), ql, qr, idx, box.y_hi);
}

// ---------------------------------------------------------------------------
// DynamicPointSet

std::int64_t DynamicPointSet::Cell::prefix(std::size_t count) const {
  std::int64_t sum = 0;
  for (std::size_t i = count; i > 0; i -= i & (~i + 1)) sum += fenwick[i];
  return sum;
}

void DynamicPointSet::Cell::add(std::size_t slot, std::int32_t delta) {
  for (std::size_t i = slot + 1; i < fenwick.size(); i += i & (~i + 1)) fenwick[i] += delta;
}

std::int64_t DynamicPointSet::Cell::count_range(Position lo, Position hi) const {
  const auto a = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), lo) - ys.begin());
  const auto b = static_cast<std::size_t>(std::upper_bound(ys.begin(), ys.end(), hi) - ys.begin());
  return a >= b ? 0 : prefix(b) - prefix(a);
}

DynamicPointSet::DynamicPointSet(std::span<const Point2D> points) {
  for (const auto& p : points) distinct_x_.push_back(p.x);
  std::sort(distinct_x_.begin(), distinct_x_.end());
  distinct_x_.erase(std::unique(distinct_x_.begin(), distinct_x_.end()), distinct_x_.end());
  const std::size_t ranks = distinct_x_.size();
  cells_.resize(ranks + 1);

  std::vector<std::vector<Position>> raw(ranks + 1);
  for (const auto& p : points) {
    const std::size_t rank =
        static_cast<std::size_t>(std::lower_bound(distinct_x_.begin(), distinct_x_.end(), p.x) -
                                 distinct_x_.begin()) + 1;
    for (std::size_t i = rank; i <= ranks; i += i & (~i + 1)) raw[i].push_back(p.y);
    ++counts_[key(p)];
  }
  live_ = points.size();

  for (std::size_t i = 1; i <= ranks; ++i) {
    auto& ys = raw[i];
    std::sort(ys.begin(), ys.end());
    Cell& cell = cells_[i];
    std::vector<std::int32_t> mult;
    for (Position y : ys) {
      if (cell.ys.empty() || cell.ys.back() != y) {
        cell.ys.push_back(y);
        mult.push_back(0);
      }
      ++mult.back();
    }
    // Linear-time Fenwick construction.
    cell.fenwick.assign(cell.ys.size() + 1, 0);
    for (std::size_t s = 1; s <= cell.ys.size(); ++s) {
      cell.fenwick[s] += mult[s - 1];
      const std::size_t parent = s + (s & (~s + 1));
      if (parent <= cell.ys.size()) cell.fenwick[parent] += cell.fenwick[s];
    }
    std::vector<Position>().swap(ys);
  }
}

std::int64_t DynamicPointSet::prefix_count(std::size_t rank, Position y_lo, Position y_hi) const {
  std::int64_t sum = 0;
  for (std::size_t i = rank; i > 0; i -= i & (~i + 1)) sum += cells_[i].count_range(y_lo, y_hi);
  return sum;
}

bool DynamicPointSet::box_nonempty(const Box& box) const {
  box.validate();
  if (live_ == 0) return false;
  const auto lo = static_cast<std::size_t>(
      std::lower_bound(distinct_x_.begin(), distinct_x_.end(), box.x_lo) - distinct_x_.begin());
  const auto hi = static_cast<std::size_t>(
      std::upper_bound(distinct_x_.begin(), distinct_x_.end(), box.x_hi) - distinct_x_.begin());
  if (lo >= hi) return false;
  return prefix_count(hi, box.y_lo, box.y_hi) - prefix_count(lo, box.y_lo, box.y_hi) > 0;
}

void DynamicPointSet::delete_point(const Point2D& p) {
  auto it = counts_.find(key(p));
  if (it == counts_.end() || it->second == 0) {
    throw std::invalid_argument("point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                ") is not present");
  }
  --it->second;
  --live_;
  const std::size_t rank =
      static_cast<std::size_t>(std::lower_bound(distinct_x_.begin(), distinct_x_.end(), p.x) -
                               distinct_x_.begin()) + 1;
  for (std::size_t i = rank; i < cells_.size(); i += i & (~i + 1)) {
    Cell& cell = cells_[i];
    const auto slot =
        static_cast<std::size_t>(std::lower_bound(cell.ys.begin(), cell.ys.end(), p.y) - cell.ys.begin());
    cell.add(slot, -1);
  }
}

std::size_t DynamicPointSet::multiplicity(const Point2D& p) const {
  auto it = counts_.find(key(p));
  return it == counts_.end() ? 0 : it->second;
}

}  // namespace dyncon
