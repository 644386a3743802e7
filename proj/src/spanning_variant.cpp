#include "dyncon/spanning_variant.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "dyncon/union_find.hpp"

namespace dyncon {

namespace {

// Local improvement in the style of Fürer and Raghavachari. With k the
// current maximum degree, vertices of degree >= k-1 are "bad". A nontree
// edge joining two different components of the forest T - bad closes a
// cycle through bad vertices. If one of them has degree k the swap lowers
// it; otherwise the bad vertices on the cycle are unblocked, remember the
// edge as their own pending improvement, and become good. When no such edge
// remains, the surviving bad set witnesses Delta(T) <= Delta* + 1.
class DegreeImprover {
 public:
  DegreeImprover(const Graph& g, const std::vector<Edge>& initial)
      : g_(g), adj_(g.n() + 1), edges_(g.edges()) {
    for (const Edge& e : initial) {
      adj_[e.u].insert(e.v);
      adj_[e.v].insert(e.u);
    }
    std::sort(edges_.begin(), edges_.end());
  }

  void run() {
    while (improve_once()) {
    }
  }

  [[nodiscard]] Graph tree() const {
    Graph t(g_.n());
    for (VertexId x = 1; x <= static_cast<VertexId>(g_.n()); ++x) {
      for (VertexId y : adj_[x]) {
        if (x < y) t.add_edge(x, y);
      }
    }
    return t;
  }

 private:
  [[nodiscard]] int degree(VertexId x) const { return static_cast<int>(adj_[x].size()); }

  [[nodiscard]] std::vector<VertexId> tree_path(VertexId from, VertexId to) const {
    std::vector<VertexId> parent(g_.n() + 1, 0);
    std::deque<VertexId> queue{from};
    parent[from] = from;
    while (!queue.empty() && parent[to] == 0) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : adj_[x]) {
        if (parent[y] == 0) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    std::vector<VertexId> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Adds `e` and drops a cycle edge at w, first lowering any endpoint that
  // was itself unblocked earlier in this phase.
  void apply(VertexId w, const Edge& e, int k) {
    for (VertexId x : {e.u, e.v}) {
      if (degree(x) >= k - 1) {
        if (!pending_[x]) throw std::logic_error("degree improvement chain is broken");
        Edge next = *pending_[x];
        pending_[x].reset();
        apply(x, next, k);
      }
    }
    const auto path = tree_path(e.u, e.v);
    auto it = std::find(path.begin(), path.end(), w);
    if (it == path.end() || it == path.begin()) {
      throw std::logic_error("improvement cycle lost its blocking vertex");
    }
    VertexId t = *(it - 1);
    adj_[w].erase(t);
    adj_[t].erase(w);
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
  }

  bool improve_once() {
    const std::size_t n = g_.n();
    int k = 0;
    for (VertexId x = 1; x <= static_cast<VertexId>(n); ++x) k = std::max(k, degree(x));
    if (k <= 2) return false;

    std::vector<char> bad(n + 1, 0);
    for (VertexId x = 1; x <= static_cast<VertexId>(n); ++x) bad[x] = degree(x) >= k - 1;
    WorstCaseUnionFind forest(n + 1);
    for (VertexId x = 1; x <= static_cast<VertexId>(n); ++x) {
      if (bad[x]) continue;
      for (VertexId y : adj_[x]) {
        if (!bad[y]) forest.unite(x, y);
      }
    }
    pending_.assign(n + 1, std::nullopt);

    bool progress = true;
    while (progress) {
      progress = false;
      for (const Edge& e : edges_) {
        if (adj_[e.u].count(e.v) || bad[e.u] || bad[e.v] || forest.same(e.u, e.v)) continue;
        const auto path = tree_path(e.u, e.v);
        std::vector<VertexId> blockers;
        for (VertexId x : path) {
          if (bad[x]) blockers.push_back(x);
        }
        std::sort(blockers.begin(), blockers.end());
        for (VertexId w : blockers) {
          if (degree(w) == k) {
            apply(w, e, k);
            return true;
          }
        }
        for (VertexId w : blockers) {
          bad[w] = 0;
          pending_[w] = e;
        }
        for (VertexId w : blockers) {
          for (VertexId y : adj_[w]) {
            if (!bad[y]) forest.unite(w, y);
          }
        }
        progress = true;
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::set<VertexId>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::optional<Edge>> pending_;
};

void require_connected(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("spanning tree of an empty graph");
  if (!is_connected(g)) throw std::invalid_argument("spanning tree needs a connected graph");
}

}  // namespace

RootedTree min_degree_spanning_tree(const Graph& g) {
  require_connected(g);
  DegreeImprover improver(g, spanning_forest(g));
  improver.run();
  return RootedTree(improver.tree(), 1);
}

RootedTree bfs_spanning_tree(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.n();
  std::vector<char> seen(n + 1, 0);
  std::vector<VertexId> order{1};
  seen[1] = 1;
  Graph t(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (VertexId y : g.neighbors(order[i])) {
      if (!seen[y]) {
        seen[y] = 1;
        t.add_edge(order[i], y);
        order.push_back(y);
      }
    }
  }
  return RootedTree(t, 1);
}

TreeDecremental::TreeDecremental(const Graph& g, TreeVariantOptions options)
    : graph_(g), backend_(make_backend(options.backend)) {
  require_connected(g);
  if (options.tree) {
    tree_ = std::make_unique<RootedTree>(*options.tree);
  } else if (options.bfs_tree) {
    tree_ = std::make_unique<RootedTree>(bfs_spanning_tree(g));
  } else {
    tree_ = std::make_unique<RootedTree>(min_degree_spanning_tree(g));
  }
  tree_->require_spans(g);
  tour_ = std::make_unique<Tour>(build_tree_tour(*tree_));

  auto pts = occurrence_pair_points(*tour_);
  auto nontree = nontree_edge_points(*tour_, *tree_, g);
  pts.insert(pts.end(), nontree.begin(), nontree.end());
  initial_points_ = pts.size();
  points_ = std::make_unique<DynamicPointSet>(pts);

  const DynamicPointSet* index = points_.get();
  h_ = std::make_unique<AuxGraph>([index](const Box& box) { return index->box_nonempty(box); });
  h_->add_interval(1, static_cast<Position>(tour_->length()));
}

void TreeDecremental::delete_edge(VertexId u, VertexId v) {
  if (!graph_.has_edge(u, v)) {
    throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(v) +
                                "} is not an edge");
  }
  if (!deleted_.insert(Edge(u, v)).second) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} already deleted");
  }
  if (is_tree_edge(u, v)) {
    for (Position cut : tour_->cut_positions(u, v)) h_->split(cut, SplitGap::Between);
    return;
  }
  const auto pts = edge_points(*tour_, u, v);
  for (const auto& p : pts) points_->delete_point(p);
  std::set<std::pair<IntervalId, IntervalId>> suspects;
  for (const auto& p : pts) {
    IntervalId a = h_->locate(p.x);
    IntervalId b = h_->locate(p.y);
    if (a != b) suspects.emplace(std::min(a, b), std::max(a, b));
  }
  for (const auto& [a, b] : suspects) h_->retest_edge(a, b);
}

IntervalId TreeDecremental::representative(VertexId v) const {
  if (!graph_.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return h_->locate(tour_->occurrences(v).front());
}

bool TreeDecremental::connected(VertexId u, VertexId v) const {
  return backend_->connected(*h_, representative(u), representative(v));
}

bool TreeDecremental::connected_all() const { return backend_->connected_all(*h_); }

}  // namespace dyncon
