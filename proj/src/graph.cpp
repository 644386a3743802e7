#include "dyncon/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <iterator>
#include <sstream>

namespace dyncon {

Graph::Graph(std::size_t n) : adjacency_(n + 1) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::add_edge(VertexId a, VertexId b) {
  if (!contains(a) || !contains(b)) {
    throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                "} has an endpoint outside 1.." + std::to_string(n()));
  }
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  const Edge e(a, b);
  if (!index_.emplace(e.key(), edges_.size()).second) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "}");
  }
  edges_.push_back(e);
  auto insert_sorted = [](std::vector<VertexId>& list, VertexId x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[a], b);
  insert_sorted(adjacency_[b], a);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  if (!contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return adjacency_[v];
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 1; v < adjacency_.size(); ++v) best = std::max(best, adjacency_[v].size());
  return best;
}

bool Graph::has_edge(VertexId a, VertexId b) const { return edge_index(a, b) >= 0; }

std::ptrdiff_t Graph::edge_index(VertexId a, VertexId b) const {
  if (a == b) return -1;
  auto it = index_.find(Edge(a, b).key());
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

namespace {

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  struct Pending {
    long long u, v;
    std::size_t line;
  };
  std::vector<Pending> pending;
  long long header_n = -1;
  long long header_m = -1;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (!tokens.empty()) {
      if (tokens[0] == "p") {
        if (header_n >= 0) throw ParseError(line_no, "duplicate header");
        if (!pending.empty()) throw ParseError(line_no, "header after data lines");
        if (tokens.size() != 3 || !parse_int(tokens[1], header_n) ||
            !parse_int(tokens[2], header_m) || header_n < 0 || header_m < 0) {
          throw ParseError(line_no, "malformed header, expected 'p <n> <m>'");
        }
      } else {
        long long u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
          throw ParseError(line_no, "malformed line, expected '<u> <v>'");
        }
        if (u < 1 || v < 1) throw ParseError(line_no, "vertex ids must be >= 1");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        pending.push_back({u, v, line_no});
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }

  long long n = 0;
  for (const auto& p : pending) n = std::max({n, p.u, p.v});
  if (header_n >= 0) {
    if (n > header_n) throw ParseError(line_no, "vertex id exceeds header n");
    n = header_n;
    if (static_cast<std::size_t>(header_m) != pending.size()) {
      throw ParseError(line_no, "header declares " + std::to_string(header_m) + " edges, found " +
                                    std::to_string(pending.size()));
    }
  }
  Graph g(static_cast<std::size_t>(n));
  for (const auto& p : pending) {
    if (g.has_edge(static_cast<VertexId>(p.u), static_cast<VertexId>(p.v))) {
      throw ParseError(p.line, "duplicate edge {" + std::to_string(std::min(p.u, p.v)) + "," +
                                   std::to_string(std::max(p.u, p.v)) + "}");
    }
    g.add_edge(static_cast<VertexId>(p.u), static_cast<VertexId>(p.v));
  }
  return g;
}

Graph read_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_edge_list(text);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<int> oracle_components(const Graph& g, std::span<const Edge> removed_edges,
                                   std::span<const VertexId> removed_vertices) {
  const std::size_t n = g.n();
  std::vector<char> gone(n + 1, 0);
  for (VertexId x : removed_vertices) {
    if (!g.contains(x)) throw std::out_of_range("removed vertex out of range");
    gone[x] = 1;
  }
  std::vector<char> cut(g.m(), 0);
  for (const Edge& e : removed_edges) {
    auto idx = g.edge_index(e.u, e.v);
    if (idx >= 0) cut[idx] = 1;
  }
  std::vector<int> label(n + 1, -1);
  int next = 0;
  std::deque<VertexId> queue;
  for (VertexId s = 1; s <= static_cast<VertexId>(n); ++s) {
    if (gone[s] || label[s] >= 0) continue;
    label[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if (gone[y] || label[y] >= 0 || cut[g.edge_index(x, y)]) continue;
        label[y] = next;
        queue.push_back(y);
      }
    }
    ++next;
  }
  return label;
}

bool oracle_connected(const Graph& g, std::span<const Edge> removed_edges,
                      std::span<const VertexId> removed_vertices, VertexId u, VertexId v) {
  if (!g.contains(u) || !g.contains(v)) throw std::out_of_range("query vertex out of range");
  for (VertexId x : removed_vertices) {
    if (x == u || x == v) throw std::invalid_argument("query vertex has been removed");
  }
  auto label = oracle_components(g, removed_edges, removed_vertices);
  return label[u] == label[v];
}

std::size_t component_count(const Graph& g) {
  auto label = oracle_components(g, {}, {});
  return static_cast<std::size_t>(label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1);
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::vector<Edge> spanning_forest(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<char> seen(n + 1, 0);
  std::vector<Edge> forest;
  forest.reserve(n);
  // Explicit stack of (vertex, next neighbour index).
  std::vector<std::pair<VertexId, std::size_t>> stack;
  for (VertexId s = 1; s <= static_cast<VertexId>(n); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.emplace_back(s, 0);
    while (!stack.empty()) {
      auto& [x, i] = stack.back();
      const auto& nb = g.neighbors(x);
      if (i == nb.size()) {
        stack.pop_back();
        continue;
      }
      VertexId y = nb[i++];
      if (seen[y]) continue;
      seen[y] = 1;
      forest.emplace_back(x, y);
      stack.emplace_back(y, 0);
    }
  }
  return forest;
}

Graph edge_subgraph(const Graph& g, std::span<const Edge> edges) {
  return Graph::from_edges(g.n(), edges);
}

}  // namespace dyncon
