#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "dyncon/union_find.hpp"

namespace dyncon {
namespace {

TEST(UnionFind, FreshElementsAreDistinct) {
  const WorstCaseUnionFind uf(2);
  EXPECT_NE(uf.find(0), uf.find(1));
}

TEST(UnionFind, UnionMerges) {
  WorstCaseUnionFind uf(2);
  uf.unite(0, 1);
  EXPECT_EQ(uf.find(0), uf.find(1));
  EXPECT_EQ(uf.set_size(1), 2u);
}

TEST(UnionFind, OutOfRange) {
  const WorstCaseUnionFind uf(3);
  EXPECT_THROW(static_cast<void>(uf.find(3)), std::out_of_range);
}

TEST(UnionFind, AddAppendsSingleton) {
  WorstCaseUnionFind uf(1);
  EXPECT_EQ(uf.add(), 1u);
  EXPECT_FALSE(uf.same(0, 1));
}

TEST(UnionFind, RandomScriptMatchesReferencePartition) {
  std::mt19937_64 rng(4);
  const std::size_t n = 300;
  WorstCaseUnionFind uf(n);
  // Reference: explicit class label per element, relabelled on merge.
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  for (int step = 0; step < 2000; ++step) {
    const std::size_t x = rng() % n, y = rng() % n;
    if (rng() % 2) {
      uf.unite(x, y);
      const std::size_t from = label[y], to = label[x];
      for (auto& l : label) {
        if (l == from) l = to;
      }
    } else {
      ASSERT_EQ(uf.same(x, y), label[x] == label[y]);
    }
  }
  std::map<std::size_t, std::size_t> sizes;
  for (auto l : label) ++sizes[l];
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(uf.set_size(i), sizes[label[i]]);
}

TEST(UnionFind, DepthIsLogarithmic) {
  std::mt19937_64 rng(5);
  const std::size_t n = 1 << 12;
  WorstCaseUnionFind uf(n);
  for (int step = 0; step < 20000; ++step) uf.unite(rng() % n, rng() % n);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_LE(static_cast<double>(uf.depth(i)), std::log2(static_cast<double>(uf.set_size(i))));
  }
  // Balanced pairing reaches the bound exactly.
  WorstCaseUnionFind pairs(16);
  for (std::size_t step = 1; step < 16; step *= 2) {
    for (std::size_t i = 0; i + step < 16; i += 2 * step) pairs.unite(i, i + step);
  }
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < 16; ++i) deepest = std::max(deepest, pairs.depth(i));
  EXPECT_EQ(deepest, 4u);
}

}  // namespace
}  // namespace dyncon
