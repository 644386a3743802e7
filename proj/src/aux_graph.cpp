#include "dyncon/aux_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dyncon {

IntervalId AuxGraph::add_interval(Position lo, Position hi) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  if (try_locate(lo)) throw std::invalid_argument("interval overlaps a live interval");
  if (auto it = by_lo_.lower_bound(lo); it != by_lo_.end() && it->first <= hi) {
    throw std::invalid_argument("interval overlaps a live interval");
  }
  const auto id = static_cast<IntervalId>(vertices_.size());
  vertices_.push_back({lo, hi, true, {}});
  by_lo_.emplace(lo, id);
  ++version_;
  return id;
}

void AuxGraph::seed_all_edges() {
  auto ids = live_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (edge_test(ids[i], ids[j])) link(ids[i], ids[j]);
    }
  }
  ++version_;
}

std::optional<IntervalId> AuxGraph::try_locate(Position pos) const {
  auto it = by_lo_.upper_bound(pos);
  if (it == by_lo_.begin()) return std::nullopt;
  --it;
  if (vertices_[it->second].hi < pos) return std::nullopt;
  return it->second;
}

IntervalId AuxGraph::locate(Position pos) const {
  if (auto id = try_locate(pos)) return *id;
  throw std::out_of_range("position " + std::to_string(pos) + " is not covered by a live interval");
}

void AuxGraph::require_alive(IntervalId id) const {
  if (!alive(id)) throw std::invalid_argument("interval " + std::to_string(id) + " is not live");
}

bool AuxGraph::edge_test(IntervalId a, IntervalId b) const {
  const auto& A = vertices_.at(a);
  const auto& B = vertices_.at(b);
  return test_(Box{A.lo, A.hi, B.lo, B.hi});
}

bool AuxGraph::adjacent(IntervalId a, IntervalId b) const {
  return vertices_.at(a).adjacency.count(b) != 0;
}

void AuxGraph::link(IntervalId a, IntervalId b) {
  if (a == b) return;
  vertices_[a].adjacency.insert(b);
  vertices_[b].adjacency.insert(a);
}

void AuxGraph::kill(IntervalId id) {
  auto& v = vertices_[id];
  for (IntervalId nb : v.adjacency) vertices_[nb].adjacency.erase(id);
  v.adjacency.clear();
  v.alive = false;
  by_lo_.erase(v.lo);
}

SplitResult AuxGraph::split(Position at, SplitGap gap) {
  const IntervalId old = locate(at);
  const Position a = vertices_[old].lo;
  const Position b = vertices_[old].hi;

  std::optional<std::pair<Position, Position>> left_span, right_span;
  if (gap == SplitGap::Between) {
    if (at == b) return {old, std::nullopt, false};
    left_span = {a, at};
    right_span = {at + 1, b};
  } else {
    if (at > a) left_span = {a, at - 1};
    if (at < b) right_span = {at + 1, b};
  }

  const std::vector<IntervalId> neighbours(vertices_[old].adjacency.begin(),
                                           vertices_[old].adjacency.end());
  kill(old);

  SplitResult result;
  result.changed = true;
  if (left_span) result.left = add_interval(left_span->first, left_span->second);
  if (right_span) result.right = add_interval(right_span->first, right_span->second);
  for (auto piece : {result.left, result.right}) {
    if (!piece) continue;
    for (IntervalId nb : neighbours) {
      if (edge_test(*piece, nb)) link(*piece, nb);
    }
  }
  // The two halves can share a vertex of G (or an edge), so they are tested
  // against each other as well.
  if (result.left && result.right && edge_test(*result.left, *result.right)) {
    link(*result.left, *result.right);
  }
  ++version_;
  return result;
}

void AuxGraph::remove_interval(IntervalId id) {
  require_alive(id);
  kill(id);
  ++version_;
}

bool AuxGraph::retest_edge(IntervalId a, IntervalId b) {
  require_alive(a);
  require_alive(b);
  if (!adjacent(a, b) || edge_test(a, b)) return false;
  vertices_[a].adjacency.erase(b);
  vertices_[b].adjacency.erase(a);
  ++version_;
  return true;
}

std::vector<IntervalId> AuxGraph::live_ids() const {
  std::vector<IntervalId> ids;
  ids.reserve(by_lo_.size());
  for (const auto& [lo, id] : by_lo_) ids.push_back(id);
  return ids;
}

std::size_t AuxGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& [lo, id] : by_lo_) best = std::max(best, vertices_[id].adjacency.size());
  return best;
}

std::size_t AuxGraph::edge_count() const {
  std::size_t sum = 0;
  for (const auto& [lo, id] : by_lo_) sum += vertices_[id].adjacency.size();
  return sum / 2;
}

bool AuxGraph::connected_dfs(IntervalId a, IntervalId b) const {
  require_alive(a);
  require_alive(b);
  if (a == b) return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<IntervalId> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    IntervalId x = stack.back();
    stack.pop_back();
    for (IntervalId y : vertices_[x].adjacency) {
      if (seen[y]) continue;
      if (y == b) return true;
      seen[y] = 1;
      stack.push_back(y);
    }
  }
  return false;
}

std::vector<int> AuxGraph::component_labels() const {
  std::vector<int> label(vertices_.size(), -1);
  int next = 0;
  std::vector<IntervalId> stack;
  for (const auto& [lo, id] : by_lo_) {
    if (label[id] >= 0) continue;
    label[id] = next;
    stack.push_back(id);
    while (!stack.empty()) {
      IntervalId x = stack.back();
      stack.pop_back();
      for (IntervalId y : vertices_[x].adjacency) {
        if (label[y] < 0) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

bool AuxGraph::connected_all_dfs() const {
  if (by_lo_.empty()) return true;
  const IntervalId start = by_lo_.begin()->second;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<IntervalId> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    IntervalId x = stack.back();
    stack.pop_back();
    for (IntervalId y : vertices_[x].adjacency) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == by_lo_.size();
}

// ---------------------------------------------------------------------------

std::unique_ptr<ConnectivityBackend> make_backend(BackendKind kind) {
  switch (kind) {
    case BackendKind::Dfs:
      return std::make_unique<DfsBackend>();
    case BackendKind::UnionFindSnapshot:
      return std::make_unique<UnionFindSnapshotBackend>();
  }
  throw std::invalid_argument("unknown backend");
}

bool DfsBackend::connected(const AuxGraph& h, IntervalId a, IntervalId b) const {
  return h.connected_dfs(a, b);
}

bool DfsBackend::connected_all(const AuxGraph& h) const { return h.connected_all_dfs(); }

std::unique_ptr<ConnectivityBackend> DfsBackend::clone() const {
  return std::make_unique<DfsBackend>();
}

void UnionFindSnapshotBackend::refresh(const AuxGraph& h) const {
  if (valid_ && source_ == &h && version_ == h.version()) return;
  auto ids = h.live_ids();
  IntervalId max_id = -1;
  for (IntervalId id : ids) max_id = std::max(max_id, id);
  uf_.reset(static_cast<std::size_t>(max_id + 1));
  components_ = ids.size();
  for (IntervalId id : ids) {
    for (IntervalId nb : h.vertex(id).adjacency) {
      if (nb > id && !uf_.same(id, nb)) {
        uf_.unite(id, nb);
        --components_;
      }
    }
  }
  source_ = &h;
  version_ = h.version();
  valid_ = true;
}

bool UnionFindSnapshotBackend::connected(const AuxGraph& h, IntervalId a, IntervalId b) const {
  if (!h.alive(a) || !h.alive(b)) throw std::invalid_argument("interval is not live");
  refresh(h);
  return uf_.same(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

bool UnionFindSnapshotBackend::connected_all(const AuxGraph& h) const {
  refresh(h);
  return components_ <= 1;
}

std::unique_ptr<ConnectivityBackend> UnionFindSnapshotBackend::clone() const {
  return std::make_unique<UnionFindSnapshotBackend>();
}

}  // namespace dyncon
