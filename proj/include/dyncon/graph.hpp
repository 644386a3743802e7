#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dyncon {

/// Dense vertex id in 1..n.
using VertexId = int;

/// Undirected edge, normalised so that u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  [[nodiscard]] VertexId other(VertexId x) const { return x == u ? v : u; }
  [[nodiscard]] std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Error raised by the text readers; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Undirected simple graph on vertices 1..n. Neighbour lists are kept in
/// ascending id order so every traversal downstream is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws std::invalid_argument on self-loops, duplicates or out-of-range ends.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  void add_edge(VertexId a, VertexId b);

  [[nodiscard]] std::size_t n() const { return adjacency_.size() - 1; }
  [[nodiscard]] std::size_t m() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<VertexId>& neighbors(VertexId v) const;
  [[nodiscard]] std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  [[nodiscard]] std::size_t max_degree() const;
  [[nodiscard]] bool has_edge(VertexId a, VertexId b) const;
  [[nodiscard]] bool contains(VertexId v) const {
    return v >= 1 && static_cast<std::size_t>(v) <= n();
  }
  /// Index into edges() or -1.
  [[nodiscard]] std::ptrdiff_t edge_index(VertexId a, VertexId b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<VertexId>> adjacency_{1};
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Edge-list format: optional "p <n> <m>" header, "<u> <v>" data lines,
/// '#' comments, LF or CRLF line endings.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Reference connectivity: breadth-first search on g minus the removed edges
/// and vertices. Shares no state with any of the dynamic structures.
bool oracle_connected(const Graph& g, std::span<const Edge> removed_edges,
                      std::span<const VertexId> removed_vertices, VertexId u, VertexId v);

/// Component label per vertex (index 0 unused, removed vertices get -1) of
/// g minus the removed edges and vertices. Same search as oracle_connected.
std::vector<int> oracle_components(const Graph& g, std::span<const Edge> removed_edges,
                                   std::span<const VertexId> removed_vertices);

std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Maximal acyclic subgraph built by depth-first search from the lowest-id
/// unvisited vertex, neighbours in ascending order.
std::vector<Edge> spanning_forest(const Graph& g);

/// Subgraph with the same vertex set and the given subset of edges.
Graph edge_subgraph(const Graph& g, std::span<const Edge> edges);

}  // namespace dyncon
