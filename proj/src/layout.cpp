#include "dyncon/layout.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dyncon {

LinearLayout::LinearLayout(const Graph& g, std::vector<VertexId> order) : order_(std::move(order)) {
  const std::size_t n = g.n();
  if (order_.size() != n) throw std::invalid_argument("layout size does not match the graph");
  pos_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = order_[i];
    if (!g.contains(v) || pos_[v] != 0) throw std::invalid_argument("layout is not a permutation of 1..n");
    pos_[v] = static_cast<Position>(i + 1);
  }

  edges_.reserve(g.m());
  for (const Edge& e : g.edges()) {
    Position a = pos_[e.u], b = pos_[e.v];
    if (a > b) std::swap(a, b);
    edges_.push_back({a, b});
  }
  std::sort(edges_.begin(), edges_.end());

  hole_flag_.assign(n + 1, 0);
  for (Position i = 1; i < static_cast<Position>(n); ++i) {
    if (!g.has_edge(order_[i - 1], order_[i])) {
      hole_flag_[i] = 1;
      holes_.push_back(i);
    }
  }

  // Edge (a,b) crosses gaps a..b-1.
  std::vector<int> diff(n + 2, 0);
  for (const auto& e : edges_) {
    ++diff[e.a];
    --diff[e.b];
  }
  profile_.assign(n == 0 ? 1 : n, 0);
  int running = 0;
  for (Position i = 1; i < static_cast<Position>(n); ++i) {
    running += diff[i];
    profile_[i] = running;
    cutwidth_ = std::max(cutwidth_, running);
  }
}

bool LinearLayout::is_hole(Position gap) const {
  return gap >= 1 && static_cast<std::size_t>(gap) < hole_flag_.size() && hole_flag_[gap];
}

std::vector<PositionEdge> LinearLayout::crossing_edges(VertexId u) const {
  const Position p = position(u);
  std::vector<PositionEdge> out;
  for (const auto& e : edges_) {
    if (e.a > p) break;
    if (p <= e.b) out.push_back(e);
  }
  return out;
}

std::vector<PositionEdge> LinearLayout::edges_crossing_gap(Position gap) const {
  std::vector<PositionEdge> out;
  for (const auto& e : edges_) {
    if (e.a > gap) break;
    if (gap < e.b) out.push_back(e);
  }
  return out;
}

std::vector<Position> LinearLayout::holes_of_vertex(VertexId u) const {
  std::vector<Position> out;
  const auto crossing = crossing_edges(u);
  for (Position h : holes_) {
    for (const auto& e : crossing) {
      if (e.a <= h && h < e.b) {
        out.push_back(h);
        break;
      }
    }
  }
  return out;
}

LinearLayout layout_from_path_cover(const Graph& g, const std::vector<std::vector<VertexId>>& paths) {
  std::vector<char> used(g.n() + 1, 0);
  std::vector<VertexId> order;
  order.reserve(g.n());
  for (const auto& path : paths) {
    if (path.empty()) throw std::invalid_argument("empty path in cover");
    for (std::size_t i = 0; i < path.size(); ++i) {
      VertexId v = path[i];
      if (!g.contains(v)) throw std::invalid_argument("path vertex out of range");
      if (used[v]) throw std::invalid_argument("paths are not vertex-disjoint");
      used[v] = 1;
      if (i > 0 && !g.has_edge(path[i - 1], v)) {
        throw std::invalid_argument("consecutive path vertices " + std::to_string(path[i - 1]) +
                                    " and " + std::to_string(v) + " are not adjacent");
      }
      order.push_back(v);
    }
  }
  if (order.size() != g.n()) throw std::invalid_argument("paths do not cover every vertex");
  return LinearLayout(g, std::move(order));
}

std::vector<std::vector<VertexId>> greedy_path_cover(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<char> used(n + 1, 0);
  auto next_free = [&](VertexId x) -> VertexId {
    for (VertexId y : g.neighbors(x)) {
      if (!used[y]) return y;
    }
    return 0;
  };
  std::vector<std::vector<VertexId>> paths;
  for (VertexId s = 1; s <= static_cast<VertexId>(n); ++s) {
    if (used[s]) continue;
    std::vector<VertexId> tail{s};  // grows forward
    std::vector<VertexId> head;     // grows backward, stored reversed
    used[s] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      if (VertexId y = next_free(tail.back())) {
        used[y] = 1;
        tail.push_back(y);
        grew = true;
      }
      VertexId front = head.empty() ? s : head.back();
      if (VertexId y = next_free(front)) {
        used[y] = 1;
        head.push_back(y);
        grew = true;
      }
    }
    std::vector<VertexId> path(head.rbegin(), head.rend());
    path.insert(path.end(), tail.begin(), tail.end());
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<std::vector<VertexId>> spine_paths(const LinearLayout& layout) {
  std::vector<std::vector<VertexId>> paths;
  if (layout.n() == 0) return paths;
  paths.push_back({layout.vertex_at(1)});
  for (Position p = 2; p <= static_cast<Position>(layout.n()); ++p) {
    if (layout.is_hole(p - 1)) paths.emplace_back();
    paths.back().push_back(layout.vertex_at(p));
  }
  return paths;
}

LinearLayout exhaustive_min_cutwidth_layout(const Graph& g) {
  if (g.n() > 10) throw std::invalid_argument("exhaustive layout search is limited to n <= 10");
  std::vector<VertexId> order(g.n());
  std::iota(order.begin(), order.end(), 1);
  std::optional<LinearLayout> best;
  do {
    LinearLayout candidate(g, order);
    if (!best || candidate.cutwidth() < best->cutwidth() ||
        (candidate.cutwidth() == best->cutwidth() && candidate.holes().size() < best->holes().size())) {
      best = std::move(candidate);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

LinearLayout read_layout(std::istream& in, const Graph& g) {
  std::string line;
  std::size_t line_no = 0;
  auto next_content = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (auto hash = out.find('#'); hash != std::string::npos) out.erase(hash);
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_content(line)) throw ParseError(line_no, "missing 'layout <n>' header");
  std::istringstream header(line);
  std::string word;
  long long n = -1;
  if (!(header >> word >> n) || word != "layout" || n < 0) {
    throw ParseError(line_no, "malformed header, expected 'layout <n>'");
  }
  if (static_cast<std::size_t>(n) != g.n()) throw ParseError(line_no, "layout size does not match the graph");
  std::vector<VertexId> order;
  if (n > 0) {
    if (!next_content(line)) throw ParseError(line_no, "missing vertex order line");
    std::istringstream body(line);
    long long v;
    while (body >> v) order.push_back(static_cast<VertexId>(v));
    if (!body.eof()) throw ParseError(line_no, "non-integer token in vertex order");
    if (order.size() != static_cast<std::size_t>(n)) {
      throw ParseError(line_no, "expected " + std::to_string(n) + " vertices in order");
    }
  }
  try {
    return LinearLayout(g, std::move(order));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

void write_layout(std::ostream& out, const LinearLayout& layout) {
  out << "layout " << layout.n() << '\n';
  for (std::size_t i = 0; i < layout.n(); ++i) {
    if (i) out << ' ';
    out << layout.order()[i];
  }
  out << '\n';
}

}  // namespace dyncon
