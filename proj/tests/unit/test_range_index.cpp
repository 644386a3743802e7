#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dyncon/range_index.hpp"

namespace dyncon {
namespace {

bool scan(const std::vector<Point2D>& points, const Box& box) {
  return std::any_of(points.begin(), points.end(), [&](const Point2D& p) { return box.contains(p); });
}

Box random_box(std::mt19937_64& rng, int range) {
  auto draw = [&] { return 1 + static_cast<Position>(rng() % static_cast<std::uint64_t>(range)); };
  Position a = draw(), b = draw(), c = draw(), d = draw();
  return {std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d)};
}

TEST(StaticPointSet, EmptySetHasEmptyBoxes) {
  const StaticPointSet set(std::vector<Point2D>{});
  EXPECT_FALSE(set.box_nonempty({1, 100, 1, 100}));
}

TEST(StaticPointSet, PointOnCorner) {
  const std::vector<Point2D> pts{{2, 3}};
  const StaticPointSet set(pts);
  EXPECT_TRUE(set.box_nonempty({2, 2, 3, 3}));
  EXPECT_FALSE(set.box_nonempty({3, 3, 3, 3}));
}

TEST(StaticPointSet, NoEdgeBetweenIntervals) {
  // Edges of a 6-vertex graph as points in both orders; none joins
  // [2..3] with [4..5].
  const std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 6}, {3, 6}, {1, 4}};
  std::vector<Point2D> pts;
  for (auto [u, v] : edges) {
    pts.push_back({u, v});
    pts.push_back({v, u});
  }
  const StaticPointSet set(pts);
  EXPECT_FALSE(set.box_nonempty({2, 3, 4, 5}));
  EXPECT_FALSE(set.box_nonempty({4, 5, 2, 3}));
  EXPECT_TRUE(set.box_nonempty({1, 6, 1, 6}));
  EXPECT_TRUE(set.box_nonempty({2, 3, 4, 6}));
}

TEST(StaticPointSet, RandomAgainstScan) {
  std::mt19937_64 rng(1);
  std::vector<Point2D> pts;
  for (int i = 0; i < 200; ++i) {
    pts.push_back({1 + static_cast<Position>(rng() % 60), 1 + static_cast<Position>(rng() % 60)});
  }
  const StaticPointSet set(pts);
  for (int q = 0; q < 500; ++q) {
    const Box box = random_box(rng, 60);
    ASSERT_EQ(set.box_nonempty(box), scan(pts, box));
  }
}

TEST(StaticPointSet, ManySizesAgainstScan) {
  std::mt19937_64 rng(2);
  for (int size = 0; size < 70; ++size) {
    std::vector<Point2D> pts;
    for (int i = 0; i < size; ++i) {
      pts.push_back({1 + static_cast<Position>(rng() % 12), 1 + static_cast<Position>(rng() % 12)});
    }
    const StaticPointSet set(pts);
    for (int q = 0; q < 200; ++q) {
      const Box box = random_box(rng, 13);
      ASSERT_EQ(set.box_nonempty(box), scan(pts, box)) << "size " << size;
    }
  }
}

TEST(StaticPointSet, RejectsInvertedBox) {
  const StaticPointSet set(std::vector<Point2D>{{1, 1}});
  EXPECT_THROW(static_cast<void>(set.box_nonempty({3, 2, 1, 1})), std::invalid_argument);
}

TEST(DynamicPointSet, Empty) {
  const DynamicPointSet set(std::vector<Point2D>{});
  EXPECT_FALSE(set.box_nonempty({1, 10, 1, 10}));
  EXPECT_EQ(set.live_count(), 0u);
}

TEST(DynamicPointSet, Multiset) {
  DynamicPointSet set(std::vector<Point2D>{{1, 1}, {1, 1}});
  EXPECT_EQ(set.live_count(), 2u);
  EXPECT_EQ(set.multiplicity({1, 1}), 2u);
  set.delete_point({1, 1});
  EXPECT_TRUE(set.box_nonempty({1, 1, 1, 1}));
  set.delete_point({1, 1});
  EXPECT_FALSE(set.box_nonempty({1, 1, 1, 1}));
  EXPECT_THROW(set.delete_point({1, 1}), std::invalid_argument);
}

TEST(DynamicPointSet, DeleteLastPoint) {
  DynamicPointSet set(std::vector<Point2D>{{2, 3}});
  set.delete_point({2, 3});
  EXPECT_FALSE(set.box_nonempty({1, 5, 1, 5}));
  EXPECT_THROW(set.delete_point({4, 4}), std::invalid_argument);
}

TEST(DynamicPointSet, DuplicateSurvivesOneDelete) {
  DynamicPointSet set(std::vector<Point2D>{{2, 3}, {2, 3}});
  set.delete_point({2, 3});
  EXPECT_TRUE(set.box_nonempty({2, 2, 3, 3}));
}

TEST(DynamicPointSet, RandomDeleteSequenceAgainstScan) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Point2D> live;
    for (int i = 0; i < 150; ++i) {
      live.push_back({1 + static_cast<Position>(rng() % 30), 1 + static_cast<Position>(rng() % 30)});
    }
    DynamicPointSet set(live);
    std::shuffle(live.begin(), live.end(), rng);
    while (!live.empty()) {
      for (int q = 0; q < 20; ++q) {
        const Box box = random_box(rng, 31);
        ASSERT_EQ(set.box_nonempty(box), scan(live, box));
      }
      set.delete_point(live.back());
      live.pop_back();
      ASSERT_EQ(set.live_count(), live.size());
    }
    EXPECT_FALSE(set.box_nonempty({1, 31, 1, 31}));
  }
}

}  // namespace
}  // namespace dyncon
