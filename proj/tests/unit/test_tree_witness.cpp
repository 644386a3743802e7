#include <gtest/gtest.h>

#include <random>

#include "dyncon/tree_witness.hpp"
#include "enumerate.hpp"

namespace dyncon {
namespace {

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  Graph t(n);
  for (VertexId v = 2; v <= static_cast<VertexId>(n); ++v) {
    t.add_edge(v, 1 + static_cast<VertexId>(rng() % static_cast<std::uint64_t>(v - 1)));
  }
  return t;
}

TEST(LcaIndex, SingleVertex) {
  const LcaIndex idx(RootedTree(Graph(1), 1));
  EXPECT_EQ(idx.lca(1, 1), 1);
  EXPECT_TRUE(idx.is_ancestor(1, 1));
}

TEST(LcaIndex, PathFromEnd) {
  Graph p(6);
  for (VertexId v = 1; v < 6; ++v) p.add_edge(v, v + 1);
  const LcaIndex idx(RootedTree(p, 1));
  for (VertexId a = 1; a <= 6; ++a) {
    for (VertexId b = 1; b <= 6; ++b) EXPECT_EQ(idx.lca(a, b), std::min(a, b));
  }
}

TEST(LcaIndex, RandomTreesMatchNaiveWalk) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 100);
    const Graph t = random_tree(n, rng);
    const VertexId root = 1 + static_cast<VertexId>(rng() % n);
    const LcaIndex idx(RootedTree(t, root));
    for (VertexId a = 1; a <= static_cast<VertexId>(n); ++a) {
      for (VertexId b = 1; b <= static_cast<VertexId>(n); ++b) {
        const VertexId l = testing::naive_lca(t, root, a, b);
        ASSERT_EQ(idx.lca(a, b), l);
        ASSERT_EQ(idx.is_ancestor(a, b), l == a);
      }
    }
  }
}

TEST(LcaIndex, RangeChecks) {
  const LcaIndex idx(RootedTree(parse_edge_list("1 2\n"), 1));
  EXPECT_THROW(static_cast<void>(idx.lca(0, 1)), std::out_of_range);
  EXPECT_THROW(static_cast<void>(idx.lca(1, 3)), std::out_of_range);
}

TEST(VertexCutTree, MiddleOfPath) {
  const LcaIndex idx(RootedTree(parse_edge_list("1 2\n2 3\n"), 2));
  EXPECT_TRUE(is_vertex_cut_tree(idx, 1, 3, 2));
  EXPECT_FALSE(is_vertex_cut_tree(idx, 1, 3, 1));
  EXPECT_FALSE(is_vertex_cut_tree(idx, 1, 2, 3));
  EXPECT_THROW(is_vertex_cut_tree(idx, 1, 1, 2), std::invalid_argument);
}

TEST(VertexCutTree, RandomTreesMatchOracle) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 30);
    const Graph t = random_tree(n, rng);
    const LcaIndex idx(RootedTree(t, 1 + static_cast<VertexId>(rng() % n)));
    for (VertexId u = 1; u <= static_cast<VertexId>(n); ++u) {
      for (VertexId v = 1; v <= static_cast<VertexId>(n); ++v) {
        if (u == v) continue;
        for (VertexId w = 1; w <= static_cast<VertexId>(n); ++w) {
          const bool expected = w != u && w != v && !oracle_connected(t, {}, std::vector<VertexId>{w}, u, v);
          ASSERT_EQ(is_vertex_cut_tree(idx, u, v, w), expected);
        }
      }
    }
  }
}

TEST(Witness, EmptySetNeverCuts) {
  const LcaIndex idx(RootedTree(parse_edge_list("1 2\n2 3\n"), 1));
  EXPECT_FALSE(k_vertex_witness_tree(idx, 1, 3, {}));
  EXPECT_FALSE(k_edge_witness_tree(idx, 1, 3, {}));
}

TEST(Witness, PathBridge) {
  const LcaIndex idx(RootedTree(parse_edge_list("1 2\n2 3\n"), 1));
  const std::vector<Edge> cut{{1, 2}};
  EXPECT_TRUE(k_edge_witness_tree(idx, 1, 3, cut));
  EXPECT_FALSE(k_edge_witness_tree(idx, 2, 3, cut));
}

TEST(Witness, EdgeCutEndpointIsNotTheWholeStory) {
  // Path u=1 - x=2 and edge (2,1): removing it cuts 1 from 2 even though
  // 1 itself is an endpoint.
  const LcaIndex idx(RootedTree(parse_edge_list("1 2\n"), 1));
  const std::vector<Edge> cut{{2, 1}};
  EXPECT_TRUE(k_edge_witness_tree(idx, 1, 2, cut));
}

TEST(Witness, Rejections) {
  const LcaIndex idx(RootedTree(parse_edge_list("1 2\n2 3\n"), 1));
  const std::vector<VertexId> with_endpoint{1};
  EXPECT_THROW(k_vertex_witness_tree(idx, 1, 3, with_endpoint), std::invalid_argument);
  const std::vector<Edge> chord{{1, 3}};
  EXPECT_THROW(k_edge_witness_tree(idx, 1, 3, chord), std::invalid_argument);
}

TEST(Witness, RandomTreesRandomSetsMatchOracle) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(rng() % 20);
    const Graph t = random_tree(n, rng);
    const LcaIndex idx(RootedTree(t, 1 + static_cast<VertexId>(rng() % n)));
    const VertexId u = 1 + static_cast<VertexId>(rng() % n);
    VertexId v = u;
    while (v == u) v = 1 + static_cast<VertexId>(rng() % n);
    std::vector<Edge> edges;
    std::vector<VertexId> vertices;
    for (const Edge& e : t.edges()) {
      if (rng() % 4 == 0) edges.push_back(e);
    }
    for (VertexId w = 1; w <= static_cast<VertexId>(n); ++w) {
      if (w != u && w != v && rng() % 4 == 0) vertices.push_back(w);
    }
    ASSERT_EQ(k_edge_witness_tree(idx, u, v, edges), !oracle_connected(t, edges, {}, u, v));
    ASSERT_EQ(k_vertex_witness_tree(idx, u, v, vertices), !oracle_connected(t, {}, vertices, u, v));
  }
}

}  // namespace
}  // namespace dyncon
