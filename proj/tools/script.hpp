#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyncon/graph.hpp"
#include "dyncon/layout.hpp"

namespace dyncon::cli {

/// A command that is well formed but cannot be carried out against the
/// loaded structures (non-edge, deleted vertex, unsupported operation).
class ScriptViolation : public std::runtime_error {
 public:
  ScriptViolation(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what) {}
};

struct Command {
  enum class Kind { Delete, DeleteVertex, Query, QueryAll, WitnessEdge, WitnessVertex };
  Kind kind = Kind::Query;
  std::size_t line = 0;
  VertexId u = 0;
  VertexId v = 0;
  std::vector<Edge> edges;
  std::vector<VertexId> vertices;
};

/// One command per line; '#' starts a comment.
///   DELETE u v | DELV u | QUERY u v | QUERYALL
///   WITNESS-E u v k e1 .. ek     (edges as x-y, or 2k plain integers)
///   WITNESS-V u v k s1 .. sk
/// Throws ParseError on malformed lines.
std::vector<Command> parse_script(std::string_view text);

/// Uniform face over the three decremental engines. Operations an engine
/// does not support throw std::logic_error.
class Session {
 public:
  virtual ~Session() = default;
  [[nodiscard]] virtual std::string name() const = 0;
  virtual void delete_edge(VertexId u, VertexId v);
  virtual void delete_vertex(VertexId u);
  [[nodiscard]] virtual bool query(VertexId u, VertexId v) = 0;
  [[nodiscard]] virtual bool query_all() = 0;
  /// True iff the edges separate u and v in the current graph.
  [[nodiscard]] virtual bool witness_edges(VertexId u, VertexId v, const std::vector<Edge>& cut);
  /// True iff the vertices separate u and v in the current graph.
  [[nodiscard]] virtual bool witness_vertices(VertexId u, VertexId v, const std::vector<VertexId>& cut);
  /// Live intervals of the auxiliary graph.
  [[nodiscard]] virtual std::size_t h_size() const = 0;
};

enum class Algo { EulerTour, Tree, Layout };

Algo parse_algo(const std::string& name);
std::string algo_name(Algo algo);

struct SessionOptions {
  bool uf_backend = false;
  bool bfs_tree = false;
  bool lazy_holes = false;
};

/// `layout` is only read by the layout engine; when absent it uses the
/// greedy path-cover layout.
std::unique_ptr<Session> make_session(Algo algo, const Graph& g, const LinearLayout* layout,
                                      SessionOptions options);

struct ScriptResult {
  std::size_t checks = 0;
};

/// Runs the commands, printing one line per query. With `check`, every
/// verdict is compared against the breadth-first oracle; a disagreement
/// throws OracleMismatch. Engine rejections surface as ScriptViolation.
ScriptResult execute_script(Session& session, const Graph& g, const std::vector<Command>& commands,
                            bool check, std::ostream& out);

class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dyncon::cli
