#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dyncon/edge_decremental.hpp"
#include "enumerate.hpp"

namespace dyncon {
namespace {

void expect_matches_oracle(const EdgeDecremental& s, const Graph& g, const std::vector<Edge>& removed) {
  const auto label = oracle_components(g, removed, {});
  bool all = true;
  for (VertexId u = 1; u <= static_cast<VertexId>(g.n()); ++u) {
    all = all && label[u] == label[1];
    for (VertexId v = 1; v <= static_cast<VertexId>(g.n()); ++v) {
      ASSERT_EQ(s.connected(u, v), label[u] == label[v]) << u << "," << v;
    }
  }
  EXPECT_EQ(s.connected_all(), all);
}

TEST(EdgeDecremental, SingleEdge) {
  const EdgeDecremental s(parse_edge_list("1 2\n"));
  ASSERT_EQ(s.aux().live_count(), 1u);
  const auto& iv = s.aux().vertex(s.aux().live_ids()[0]);
  EXPECT_EQ(iv.hi - iv.lo + 1, 2);
}

TEST(EdgeDecremental, TriangleInitialState) {
  const EdgeDecremental s(parse_edge_list("1 2\n2 3\n1 3\n"));
  ASSERT_EQ(s.aux().live_count(), 1u);
  const auto& iv = s.aux().vertex(s.aux().live_ids()[0]);
  EXPECT_EQ(iv.lo, 1);
  EXPECT_EQ(iv.hi, 6);
  EXPECT_EQ(s.points().size(), 6u);
  EXPECT_TRUE(s.connected_all());
}

TEST(EdgeDecremental, TriangleDeleteKeepsConnected) {
  EdgeDecremental s(parse_edge_list("1 2\n2 3\n1 3\n"));
  s.delete_edge(1, 2);
  EXPECT_GE(s.aux().live_count(), 2u);
  EXPECT_TRUE(s.connected(1, 2));
  EXPECT_TRUE(s.connected_all());
}

TEST(EdgeDecremental, PathBridge) {
  EdgeDecremental s(parse_edge_list("1 2\n2 3\n"));
  s.delete_edge(2, 1);
  EXPECT_FALSE(s.connected(1, 2));
  EXPECT_TRUE(s.connected(2, 3));
  EXPECT_FALSE(s.connected_all());
}

TEST(EdgeDecremental, RejectsBadDeletes) {
  EdgeDecremental s(parse_edge_list("1 2\n2 3\n"));
  EXPECT_THROW(s.delete_edge(1, 3), std::invalid_argument);
  s.delete_edge(1, 2);
  EXPECT_THROW(s.delete_edge(1, 2), std::invalid_argument);
  EXPECT_THROW(static_cast<void>(s.connected(0, 1)), std::out_of_range);
}

TEST(EdgeDecremental, RandomSequencesMatchOracleWithBounds) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_connected_graph(4 + trial % 12, 0.35, rng);
    for (BackendKind kind : {BackendKind::Dfs, BackendKind::UnionFindSnapshot}) {
      EdgeDecremental s(g, kind);
      auto order = g.edges();
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<Edge> removed;
      for (const Edge& e : order) {
        s.delete_edge(e.u, e.v);
        removed.push_back(e);
        ASSERT_LE(s.aux().live_count(), 2 * removed.size() + 1);
        expect_matches_oracle(s, g, removed);
        if (::testing::Test::HasFatalFailure()) return;
      }
    }
  }
}

TEST(EdgeDecremental, CopyIsIndependent) {
  EdgeDecremental a(parse_edge_list("1 2\n2 3\n3 4\n"));
  EdgeDecremental b = a;
  b.delete_edge(2, 3);
  EXPECT_TRUE(a.connected(1, 4));
  EXPECT_FALSE(b.connected(1, 4));
}

TEST(KEdgeWitness, LeafIsolation) {
  const Graph star = parse_edge_list("1 2\n1 3\n1 4\n");
  const std::vector<Edge> cut{{1, 3}};
  EXPECT_TRUE(k_edge_witness(star, 3, 1, cut));
  EXPECT_FALSE(k_edge_witness(star, 2, 4, cut));
}

TEST(KEdgeWitness, K4SingleEdgeNeverCuts) {
  const Graph k4 = parse_edge_list("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  for (const Edge& e : k4.edges()) {
    const std::vector<Edge> cut{e};
    for (VertexId u = 1; u <= 4; ++u) {
      for (VertexId v = u + 1; v <= 4; ++v) EXPECT_FALSE(k_edge_witness(k4, u, v, cut));
    }
  }
}

TEST(KEdgeWitness, DisconnectedInputAndErrors) {
  const Graph g = parse_edge_list("1 2\n3 4\n");
  EXPECT_TRUE(k_edge_witness(g, 1, 3, {}));
  EXPECT_FALSE(k_edge_witness(g, 1, 2, {}));
  EXPECT_THROW(k_edge_witness(g, 1, 1, {}), std::invalid_argument);
  const std::vector<Edge> bad{{1, 3}};
  EXPECT_THROW(k_edge_witness(g, 1, 2, bad), std::invalid_argument);
  const std::vector<Edge> twice{{1, 2}, {1, 2}};
  EXPECT_THROW(k_edge_witness(g, 1, 2, twice), std::invalid_argument);
}

TEST(KEdgeWitness, ExhaustiveSmallGraphs) {
  for (std::size_t n = 2; n <= 4; ++n) {
    testing::for_each_graph(n, [&](const Graph& g) {
      testing::for_each_subset(g.m(), 3, [&](const std::vector<std::size_t>& pick) {
        std::vector<Edge> cut;
        for (auto i : pick) cut.push_back(g.edges()[i]);
        for (VertexId u = 1; u <= static_cast<VertexId>(n); ++u) {
          for (VertexId v = u + 1; v <= static_cast<VertexId>(n); ++v) {
            ASSERT_EQ(k_edge_witness(g, u, v, cut), !oracle_connected(g, cut, {}, u, v));
          }
        }
      });
    });
  }
}

}  // namespace
}  // namespace dyncon
