#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dyncon {

/// Union-find with union by size and no path compression: find never writes,
/// costs O(log n) in the worst case, and union is O(1) once roots are known.
class WorstCaseUnionFind {
 public:
  WorstCaseUnionFind() = default;
  explicit WorstCaseUnionFind(std::size_t count) { reset(count); }

  void reset(std::size_t count) {
    parent_.resize(count);
    size_.assign(count, 1);
    for (std::size_t i = 0; i < count; ++i) parent_[i] = i;
  }

  std::size_t add() {
    parent_.push_back(parent_.size());
    size_.push_back(1);
    return parent_.size() - 1;
  }

  [[nodiscard]] std::size_t size() const { return parent_.size(); }

  [[nodiscard]] std::size_t find(std::size_t x) const {
    check(x);
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// Links the smaller tree under the larger; returns the surviving root.
  std::size_t unite(std::size_t x, std::size_t y) {
    std::size_t a = find(x);
    std::size_t b = find(y);
    if (a == b) return a;
    if (size_[a] < size_[b] || (size_[a] == size_[b] && b < a)) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

  [[nodiscard]] bool same(std::size_t x, std::size_t y) const { return find(x) == find(y); }

  /// Number of links from x to its root.
  [[nodiscard]] std::size_t depth(std::size_t x) const {
    check(x);
    std::size_t d = 0;
    while (parent_[x] != x) {
      x = parent_[x];
      ++d;
    }
    return d;
  }

  [[nodiscard]] std::size_t set_size(std::size_t x) const { return size_[find(x)]; }

 private:
  void check(std::size_t x) const {
    if (x >= parent_.size()) throw std::out_of_range("union-find element out of range");
  }

  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace dyncon
