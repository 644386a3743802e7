#include "dyncon/tree_witness.hpp"

#include <stdexcept>
#include <string>

namespace dyncon {

LcaIndex::LcaIndex(const RootedTree& tree) : tree_(tree) {
  const std::size_t n = tree.n();
  first_.assign(n + 1, -1);
  enter_.assign(n + 1, 0);
  leave_.assign(n + 1, 0);
  euler_.reserve(2 * n);

  int clock = 0;
  std::vector<std::pair<VertexId, std::size_t>> stack{{tree.root(), 0}};
  first_[tree.root()] = 0;
  enter_[tree.root()] = clock++;
  euler_.push_back(tree.root());
  while (!stack.empty()) {
    auto [v, i] = stack.back();
    const auto& kids = tree.children(v);
    if (i < kids.size()) {
      stack.back().second = i + 1;
      VertexId c = kids[i];
      first_[c] = static_cast<int>(euler_.size());
      enter_[c] = clock++;
      euler_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      leave_[v] = clock++;
      stack.pop_back();
      if (!stack.empty()) euler_.push_back(stack.back().first);
    }
  }

  const std::size_t len = euler_.size();
  log2_.assign(len + 1, 0);
  for (std::size_t i = 2; i <= len; ++i) log2_[i] = log2_[i / 2] + 1;
  table_.assign(static_cast<std::size_t>(log2_[len]) + 1, std::vector<int>(len));
  for (std::size_t i = 0; i < len; ++i) table_[0][i] = static_cast<int>(i);
  for (std::size_t j = 1; j < table_.size(); ++j) {
    const std::size_t half = std::size_t{1} << (j - 1);
    for (std::size_t i = 0; i + (half << 1) <= len; ++i) {
      int a = table_[j - 1][i];
      int b = table_[j - 1][i + half];
      table_[j][i] = tree_.depth(euler_[a]) <= tree_.depth(euler_[b]) ? a : b;
    }
  }
}

void LcaIndex::check(VertexId v) const {
  if (v < 1 || static_cast<std::size_t>(v) > tree_.n()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in tree");
  }
}

VertexId LcaIndex::lca(VertexId u, VertexId v) const {
  check(u);
  check(v);
  int l = first_[u];
  int r = first_[v];
  if (l > r) std::swap(l, r);
  const int j = log2_[r - l + 1];
  int a = table_[j][l];
  int b = table_[j][r - (1 << j) + 1];
  return tree_.depth(euler_[a]) <= tree_.depth(euler_[b]) ? euler_[a] : euler_[b];
}

bool LcaIndex::is_ancestor(VertexId a, VertexId b) const {
  check(a);
  check(b);
  return enter_[a] <= enter_[b] && leave_[b] <= leave_[a];
}

bool is_vertex_cut_tree(const LcaIndex& idx, VertexId u, VertexId v, VertexId w) {
  if (u == v) throw std::invalid_argument("vertex cut query needs u != v");
  const VertexId top = idx.lca(u, v);
  if (w == u || w == v) return false;
  return idx.is_ancestor(top, w) && (idx.is_ancestor(w, u) || idx.is_ancestor(w, v));
}

bool k_vertex_witness_tree(const LcaIndex& idx, VertexId u, VertexId v,
                           std::span<const VertexId> cut) {
  if (u == v) throw std::invalid_argument("vertex cut query needs u != v");
  for (VertexId s : cut) {
    if (s == u || s == v) throw std::invalid_argument("query endpoint inside the cut set");
  }
  for (VertexId s : cut) {
    if (is_vertex_cut_tree(idx, u, v, s)) return true;
  }
  return false;
}

bool k_edge_witness_tree(const LcaIndex& idx, VertexId u, VertexId v, std::span<const Edge> cut) {
  const auto& tree = idx.tree();
  // Validate the whole set before answering.
  std::vector<VertexId> lower;
  lower.reserve(cut.size());
  for (const Edge& e : cut) {
    if (e.u < 1 || e.v < 1 || static_cast<std::size_t>(e.v) > tree.n() ||
        !tree.graph().has_edge(e.u, e.v)) {
      throw std::invalid_argument("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} is not a tree edge");
    }
    lower.push_back(tree.parent(e.u) == e.v ? e.u : e.v);
  }
  static_cast<void>(idx.lca(u, v));  // range check
  for (VertexId x : lower) {
    if (idx.is_ancestor(x, u) != idx.is_ancestor(x, v)) return true;
  }
  return false;
}

}  // namespace dyncon
