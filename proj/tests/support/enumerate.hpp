#pragma once

// Brute-force generators and reference answers used by the tests. Nothing
// here touches the structures under test.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dyncon/graph.hpp"

namespace dyncon::testing {

/// Unordered vertex pairs of 1..n in lexicographic order.
std::vector<Edge> all_pairs(std::size_t n);

/// Graph whose edges are the pairs selected by bit i of mask.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Calls f on every labelled graph on n vertices (2^(n choose 2) of them).
void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& f);
void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& f);

/// Every labelled tree on n >= 2 vertices, decoded from its Prüfer sequence.
void for_each_tree(std::size_t n, const std::function<void(const Graph&)>& f);
Graph tree_from_pruefer(std::size_t n, const std::vector<VertexId>& code);

/// Connected graphs on n vertices, one per isomorphism class.
std::vector<Graph> connected_graphs_up_to_iso(std::size_t n);
/// Isomorphism-invariant code: equal iff the graphs are isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// Calls f on every subset of {0..count-1} of size <= max_size.
void for_each_subset(std::size_t count, std::size_t max_size,
                     const std::function<void(const std::vector<std::size_t>&)>& f);

/// Calls f on every sequence of distinct elements of {1..n} of length <= max_len
/// (the empty sequence included), depth first.
void for_each_sequence(std::size_t n, std::size_t max_len,
                       const std::function<void(const std::vector<VertexId>&)>& f);

/// Lowest common ancestor by walking parent pointers in a tree rooted at root.
VertexId naive_lca(const Graph& tree, VertexId root, VertexId u, VertexId v);

/// Smallest maximum degree over all spanning trees of a connected g, by
/// exhaustive search.
std::size_t min_spanning_tree_degree(const Graph& g);

/// Fewest vertex-disjoint paths covering g, by exhaustive search (n <= 10).
std::size_t min_path_cover(const Graph& g);

/// G(n, p) drawn with the given generator (not necessarily connected).
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace dyncon::testing
