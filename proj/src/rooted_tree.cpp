#include "dyncon/rooted_tree.hpp"

#include <string>

namespace dyncon {

RootedTree::RootedTree(const Graph& tree, VertexId root) : graph_(tree), root_(root) {
  const std::size_t n = tree.n();
  if (!tree.contains(root)) throw std::invalid_argument("root outside the tree");
  if (tree.m() + 1 != n) throw std::invalid_argument("input is not a tree: wrong edge count");
  parent_.assign(n + 1, -1);
  children_.assign(n + 1, {});
  depth_.assign(n + 1, 0);
  parent_[root] = 0;
  std::vector<VertexId> order{root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId x = order[i];
    for (VertexId y : tree.neighbors(x)) {
      if (y == parent_[x]) continue;
      if (parent_[y] != -1) throw std::invalid_argument("input is not a tree: cycle detected");
      parent_[y] = x;
      depth_[y] = depth_[x] + 1;
      children_[x].push_back(y);
      order.push_back(y);
    }
  }
  if (order.size() != n) throw std::invalid_argument("input is not a tree: disconnected");

  postorder_.reserve(n);
  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i < children_[x].size()) {
      VertexId c = children_[x][i++];
      stack.emplace_back(c, 0);
    } else {
      postorder_.push_back(x);
      stack.pop_back();
    }
  }
}

void RootedTree::require_spans(const Graph& g) const {
  if (g.n() != n()) throw std::invalid_argument("tree and graph have different vertex counts");
  for (const Edge& e : graph_.edges()) {
    if (!g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("tree edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} is not an edge of the graph");
    }
  }
}

}  // namespace dyncon
