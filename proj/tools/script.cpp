#include "script.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "dyncon/edge_decremental.hpp"
#include "dyncon/layout_decremental.hpp"
#include "dyncon/spanning_variant.hpp"

namespace dyncon::cli {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexId to_int(std::string_view tok, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

Edge to_edge(std::string_view tok, std::size_t line) {
  const auto dash = tok.find('-', 1);
  if (dash == std::string_view::npos) throw ParseError(line, "expected an edge x-y, got '" + std::string(tok) + "'");
  return Edge(to_int(tok.substr(0, dash), line), to_int(tok.substr(dash + 1), line));
}

std::string pair_text(VertexId u, VertexId v) { return std::to_string(u) + " " + std::to_string(v); }

}  // namespace

std::vector<Command> parse_script(std::string_view text) {
  std::vector<Command> commands;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_tokens(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }

    Command c;
    c.line = line_no;
    const std::string_view op = tok[0];
    auto need = [&](std::size_t count) {
      if (tok.size() != count) {
        throw ParseError(line_no, std::string(op) + " takes " + std::to_string(count - 1) + " arguments");
      }
    };
    if (op == "DELETE") {
      need(3);
      c.kind = Command::Kind::Delete;
      c.u = to_int(tok[1], line_no);
      c.v = to_int(tok[2], line_no);
    } else if (op == "DELV") {
      need(2);
      c.kind = Command::Kind::DeleteVertex;
      c.u = to_int(tok[1], line_no);
    } else if (op == "QUERY") {
      need(3);
      c.kind = Command::Kind::Query;
      c.u = to_int(tok[1], line_no);
      c.v = to_int(tok[2], line_no);
    } else if (op == "QUERYALL") {
      need(1);
      c.kind = Command::Kind::QueryAll;
    } else if (op == "WITNESS-E" || op == "WITNESS-V") {
      if (tok.size() < 4) throw ParseError(line_no, std::string(op) + " needs u v k");
      c.u = to_int(tok[1], line_no);
      c.v = to_int(tok[2], line_no);
      const int k = to_int(tok[3], line_no);
      if (k < 0) throw ParseError(line_no, "negative set size");
      const std::size_t rest = tok.size() - 4;
      if (op == "WITNESS-V") {
        c.kind = Command::Kind::WitnessVertex;
        if (rest != static_cast<std::size_t>(k)) throw ParseError(line_no, "expected " + std::to_string(k) + " vertices");
        for (std::size_t i = 4; i < tok.size(); ++i) c.vertices.push_back(to_int(tok[i], line_no));
      } else {
        c.kind = Command::Kind::WitnessEdge;
        if (rest == static_cast<std::size_t>(k) && (k == 0 || tok[4].find('-', 1) != std::string_view::npos)) {
          for (std::size_t i = 4; i < tok.size(); ++i) c.edges.push_back(to_edge(tok[i], line_no));
        } else if (rest == 2 * static_cast<std::size_t>(k)) {
          for (std::size_t i = 4; i < tok.size(); i += 2) {
            c.edges.emplace_back(to_int(tok[i], line_no), to_int(tok[i + 1], line_no));
          }
        } else {
          throw ParseError(line_no, "expected " + std::to_string(k) + " edges");
        }
      }
    } else {
      throw ParseError(line_no, "unknown command '" + std::string(op) + "'");
    }
    commands.push_back(std::move(c));
    if (end == text.size()) break;
  }
  return commands;
}

void Session::delete_edge(VertexId, VertexId) {
  throw std::logic_error(name() + " does not support edge deletion");
}
void Session::delete_vertex(VertexId) {
  throw std::logic_error(name() + " does not support vertex deletion");
}
bool Session::witness_edges(VertexId, VertexId, const std::vector<Edge>&) {
  throw std::logic_error(name() + " does not answer edge witness queries");
}
bool Session::witness_vertices(VertexId, VertexId, const std::vector<VertexId>&) {
  throw std::logic_error(name() + " does not answer vertex witness queries");
}

Algo parse_algo(const std::string& name) {
  if (name == "et") return Algo::EulerTour;
  if (name == "tree") return Algo::Tree;
  if (name == "layout") return Algo::Layout;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::string algo_name(Algo algo) {
  switch (algo) {
    case Algo::EulerTour: return "et";
    case Algo::Tree: return "tree";
    case Algo::Layout: return "layout";
  }
  return "?";
}

namespace {

// Shared by the two edge-deletion engines: witness queries run against the
// graph that is left.
class EdgeSessionBase : public Session {
 public:
  explicit EdgeSessionBase(const Graph& g) : graph_(g) {}

  bool witness_edges(VertexId u, VertexId v, const std::vector<Edge>& cut) override {
    std::vector<Edge> alive;
    for (const Edge& e : graph_.edges()) {
      if (!deleted_.count(e)) alive.push_back(e);
    }
    return k_edge_witness(edge_subgraph(graph_, alive), u, v, cut);
  }

 protected:
  void note_deleted(VertexId u, VertexId v) { deleted_.insert(Edge(u, v)); }

 private:
  const Graph& graph_;
  std::set<Edge> deleted_;
};

class EulerTourSession final : public EdgeSessionBase {
 public:
  EulerTourSession(const Graph& g, BackendKind backend) : EdgeSessionBase(g), engine_(g, backend) {}
  std::string name() const override { return "et"; }
  void delete_edge(VertexId u, VertexId v) override {
    engine_.delete_edge(u, v);
    note_deleted(u, v);
  }
  bool query(VertexId u, VertexId v) override { return engine_.connected(u, v); }
  bool query_all() override { return engine_.connected_all(); }
  std::size_t h_size() const override { return engine_.aux().live_count(); }

 private:
  EdgeDecremental engine_;
};

class TreeSession final : public EdgeSessionBase {
 public:
  TreeSession(const Graph& g, TreeVariantOptions options) : EdgeSessionBase(g), engine_(g, options) {}
  std::string name() const override { return "tree"; }
  void delete_edge(VertexId u, VertexId v) override {
    engine_.delete_edge(u, v);
    note_deleted(u, v);
  }
  bool query(VertexId u, VertexId v) override { return engine_.connected(u, v); }
  bool query_all() override { return engine_.connected_all(); }
  std::size_t h_size() const override { return engine_.aux().live_count(); }

 private:
  TreeDecremental engine_;
};

class LayoutSession final : public Session {
 public:
  LayoutSession(const Graph& g, const LinearLayout& layout, LayoutDecrementalOptions options)
      : engine_(g, layout, options) {}
  std::string name() const override { return "layout"; }
  void delete_vertex(VertexId u) override { engine_.delete_vertex(u); }
  bool query(VertexId u, VertexId v) override { return engine_.connected(u, v); }
  bool query_all() override { return engine_.connected_all(); }
  bool witness_vertices(VertexId u, VertexId v, const std::vector<VertexId>& cut) override {
    if (u == v) throw std::invalid_argument("witness query needs u != v");
    LayoutDecremental scratch = engine_;
    for (VertexId s : cut) {
      if (s == u || s == v) throw std::invalid_argument("query endpoint inside the cut set");
      scratch.delete_vertex(s);
    }
    return !scratch.connected(u, v);
  }
  std::size_t h_size() const override { return engine_.aux().live_count(); }

 private:
  LayoutDecremental engine_;
};

}  // namespace

std::unique_ptr<Session> make_session(Algo algo, const Graph& g, const LinearLayout* layout,
                                      SessionOptions options) {
  const BackendKind backend = options.uf_backend ? BackendKind::UnionFindSnapshot : BackendKind::Dfs;
  switch (algo) {
    case Algo::EulerTour:
      return std::make_unique<EulerTourSession>(g, backend);
    case Algo::Tree: {
      TreeVariantOptions t;
      t.bfs_tree = options.bfs_tree;
      t.backend = backend;
      return std::make_unique<TreeSession>(g, t);
    }
    case Algo::Layout: {
      LayoutDecrementalOptions l;
      l.lazy_holes = options.lazy_holes;
      l.backend = backend;
      if (layout) return std::make_unique<LayoutSession>(g, *layout, l);
      return std::make_unique<LayoutSession>(g, layout_from_path_cover(g, greedy_path_cover(g)), l);
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

ScriptResult execute_script(Session& session, const Graph& g, const std::vector<Command>& commands,
                            bool check, std::ostream& out) {
  ScriptResult result;
  std::vector<Edge> removed_edges;
  std::vector<VertexId> removed_vertices;

  auto mismatch = [&](const Command& c, const std::string& what, bool got, bool want) {
    std::ostringstream msg;
    msg << "line " << c.line << ": " << session.name() << " answered " << (got ? "true" : "false")
        << " for " << what << " but the oracle says " << (want ? "true" : "false");
    throw OracleMismatch(msg.str());
  };

  for (const Command& c : commands) {
    try {
      switch (c.kind) {
        case Command::Kind::Delete:
          session.delete_edge(c.u, c.v);
          removed_edges.emplace_back(c.u, c.v);
          break;
        case Command::Kind::DeleteVertex:
          session.delete_vertex(c.u);
          removed_vertices.push_back(c.u);
          break;
        case Command::Kind::Query: {
          const bool got = session.query(c.u, c.v);
          out << (got ? "true" : "false") << '\n';
          if (check) {
            ++result.checks;
            const bool want = oracle_connected(g, removed_edges, removed_vertices, c.u, c.v);
            if (got != want) mismatch(c, "QUERY " + pair_text(c.u, c.v), got, want);
          }
          break;
        }
        case Command::Kind::QueryAll: {
          const bool got = session.query_all();
          out << (got ? "true" : "false") << '\n';
          if (check) {
            ++result.checks;
            const auto label = oracle_components(g, removed_edges, removed_vertices);
            int first = -1;
            bool want = true;
            for (std::size_t v = 1; v < label.size(); ++v) {
              if (label[v] < 0) continue;
              if (first < 0) first = label[v];
              want = want && label[v] == first;
            }
            if (got != want) mismatch(c, "QUERYALL", got, want);
          }
          break;
        }
        case Command::Kind::WitnessEdge: {
          const bool got = session.witness_edges(c.u, c.v, c.edges);
          out << (got ? "cut" : "not-a-cut") << '\n';
          if (check) {
            ++result.checks;
            auto removed = removed_edges;
            removed.insert(removed.end(), c.edges.begin(), c.edges.end());
            const bool want = !oracle_connected(g, removed, removed_vertices, c.u, c.v);
            if (got != want) mismatch(c, "WITNESS-E " + pair_text(c.u, c.v), got, want);
          }
          break;
        }
        case Command::Kind::WitnessVertex: {
          const bool got = session.witness_vertices(c.u, c.v, c.vertices);
          out << (got ? "cut" : "not-a-cut") << '\n';
          if (check) {
            ++result.checks;
            auto removed = removed_vertices;
            removed.insert(removed.end(), c.vertices.begin(), c.vertices.end());
            const bool want = !oracle_connected(g, removed_edges, removed, c.u, c.v);
            if (got != want) mismatch(c, "WITNESS-V " + pair_text(c.u, c.v), got, want);
          }
          break;
        }
      }
    } catch (const OracleMismatch&) {
      throw;
    } catch (const std::logic_error& e) {
      throw ScriptViolation(c.line, e.what());
    }
  }
  return result;
}

}  // namespace dyncon::cli
