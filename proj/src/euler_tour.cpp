#include "dyncon/euler_tour.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dyncon {

std::array<Position, 2> Tour::cut_positions(VertexId a, VertexId b) const {
  auto it = cuts_.find(Edge(a, b).key());
  if (it == cuts_.end()) {
    throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                "} is not on the tour");
  }
  return it->second;
}

void Tour::index_occurrences(std::size_t n) {
  occ_.assign(n + 1, {});
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    occ_[seq_[i]].push_back(static_cast<Position>(i + 1));
  }
}

namespace {

void record_arc(std::unordered_map<std::uint64_t, std::array<Position, 2>>& cuts,
                std::unordered_map<std::uint64_t, int>& filled, VertexId a, VertexId b,
                Position pos) {
  const auto key = Edge(a, b).key();
  int& count = filled[key];
  if (count >= 2) throw std::logic_error("edge realised by more than two arcs");
  cuts[key][count++] = pos;
}

}  // namespace

Tour build_doubled_tour(const Graph& g) {
  if (g.m() == 0) throw std::invalid_argument("doubled tour needs at least one edge");
  if (!is_connected(g)) throw std::invalid_argument("doubled tour needs a connected graph");

  const std::size_t n = g.n();
  std::vector<std::size_t> next(n + 1, 0);
  std::vector<VertexId> stack{1};
  std::vector<VertexId> circuit;
  circuit.reserve(2 * g.m() + 1);
  while (!stack.empty()) {
    VertexId x = stack.back();
    const auto& nb = g.neighbors(x);
    if (next[x] < nb.size()) {
      stack.push_back(nb[next[x]++]);
    } else {
      circuit.push_back(x);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  circuit.pop_back();  // closing copy of the start vertex

  Tour t;
  t.kind_ = TourKind::DoubledGraph;
  t.seq_ = std::move(circuit);
  t.index_occurrences(n);
  std::unordered_map<std::uint64_t, int> filled;
  const std::size_t len = t.seq_.size();
  for (std::size_t i = 0; i < len; ++i) {
    record_arc(t.cuts_, filled, t.seq_[i], t.seq_[(i + 1) % len], static_cast<Position>(i + 1));
  }
  for (auto& [key, pos] : t.cuts_) std::sort(pos.begin(), pos.end());
  return t;
}

Tour build_tree_tour(const RootedTree& tree) {
  Tour t;
  t.kind_ = TourKind::Tree;
  const std::size_t n = tree.n();
  t.seq_.reserve(2 * n - 1);
  std::unordered_map<std::uint64_t, int> filled;

  std::vector<std::pair<VertexId, std::size_t>> stack{{tree.root(), 0}};
  t.seq_.push_back(tree.root());
  while (!stack.empty()) {
    auto [v, i] = stack.back();
    const auto& kids = tree.children(v);
    if (i < kids.size()) {
      stack.back().second = i + 1;
      VertexId c = kids[i];
      // Arc v -> c sits at the position of the current last entry.
      record_arc(t.cuts_, filled, v, c, static_cast<Position>(t.seq_.size()));
      t.seq_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        VertexId parent = stack.back().first;
        record_arc(t.cuts_, filled, v, parent, static_cast<Position>(t.seq_.size()));
        t.seq_.push_back(parent);
      }
    }
  }
  t.index_occurrences(n);
  return t;
}

std::vector<Point2D> occurrence_pair_points(const Tour& t) {
  std::vector<Point2D> points;
  const auto& seq = t.sequence();
  VertexId max_v = seq.empty() ? 0 : *std::max_element(seq.begin(), seq.end());
  for (VertexId v = 1; v <= max_v; ++v) {
    const auto& occ = t.occurrences(v);
    for (Position a : occ) {
      for (Position b : occ) {
        if (a != b) points.push_back({a, b});
      }
    }
  }
  return points;
}

std::vector<Point2D> edge_points(const Tour& t, VertexId u, VertexId v) {
  std::vector<Point2D> points;
  for (Position a : t.occurrences(u)) {
    for (Position b : t.occurrences(v)) {
      points.push_back({a, b});
      points.push_back({b, a});
    }
  }
  return points;
}

std::vector<Point2D> nontree_edge_points(const Tour& t, const RootedTree& tree, const Graph& g) {
  tree.require_spans(g);
  std::vector<Point2D> points;
  for (const Edge& e : g.edges()) {
    if (tree.graph().has_edge(e.u, e.v)) continue;
    auto more = edge_points(t, e.u, e.v);
    points.insert(points.end(), more.begin(), more.end());
  }
  return points;
}

}  // namespace dyncon
