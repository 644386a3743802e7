#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "bench.hpp"
#include "dyncon/certificate.hpp"
#include "dyncon/edge_decremental.hpp"
#include "dyncon/graph.hpp"
#include "dyncon/layout.hpp"
#include "dyncon/rooted_tree.hpp"
#include "dyncon/tree_witness.hpp"
#include "dyncon/vertex_labels.hpp"
#include "script.hpp"

namespace dyncon::cli {

namespace {

// Unreadable or malformed input files, and inputs the structures reject.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Graph load_graph(const std::string& path) {
  try {
    return parse_edge_list(slurp(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

LinearLayout load_layout(const std::string& path, const Graph& g) {
  std::istringstream in(slurp(path));
  try {
    return read_layout(in, g);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<Command> load_script(const std::string& path) {
  try {
    return parse_script(slurp(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Edge parse_edge_token(const std::string& tok) {
  const auto dash = tok.find('-', 1);
  try {
    if (dash == std::string::npos) throw std::invalid_argument(tok);
    std::size_t used_a = 0, used_b = 0;
    const std::string a = tok.substr(0, dash), b = tok.substr(dash + 1);
    const int x = std::stoi(a, &used_a);
    const int y = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(tok);
    return Edge(x, y);
  } catch (const std::logic_error&) {
    throw InputError("malformed edge '" + tok + "', expected x-y");
  }
}

const char* verdict(bool cut) { return cut ? "cut" : "not-a-cut"; }

std::unique_ptr<Session> build_session(Algo algo, const Graph& g, const LinearLayout* layout,
                                       SessionOptions options) {
  try {
    return make_session(algo, g, layout, options);
  } catch (const std::invalid_argument& e) {
    throw InputError(algo_name(algo) + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decremental connectivity and cut-witness structures", "dyncon"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // decremental
  std::string algo_text = "et", backend = "dfs", graph_path, script_path, layout_path;
  bool check = false, bfs_tree = false, lazy_holes = false;
  auto* dec = app.add_subcommand("decremental", "Run an operation script against one engine");
  dec->add_option("--algo", algo_text, "et | tree | layout")->check(CLI::IsMember({"et", "tree", "layout"}));
  dec->add_option("--layout", layout_path, "Layout file (layout engine; default greedy path cover)");
  dec->add_option("--backend", backend, "dfs | uf")->check(CLI::IsMember({"dfs", "uf"}));
  dec->add_flag("--bfs-tree", bfs_tree, "Tree engine: use a BFS spanning tree");
  dec->add_flag("--lazy-holes", lazy_holes, "Layout engine: split at holes on demand");
  dec->add_flag("--check", check, "Verify every answer against the oracle");
  dec->add_option("graph", graph_path)->required();
  dec->add_option("script", script_path)->required();

  // layout-decremental
  auto* ldec = app.add_subcommand("layout-decremental", "Vertex deletions over a fixed layout");
  ldec->add_option("--backend", backend, "dfs | uf")->check(CLI::IsMember({"dfs", "uf"}));
  ldec->add_flag("--lazy-holes", lazy_holes, "Split at holes on demand");
  ldec->add_flag("--check", check, "Verify every answer against the oracle");
  ldec->add_option("graph", graph_path)->required();
  ldec->add_option("layout", layout_path)->required();
  ldec->add_option("script", script_path)->required();

  // witness-e
  VertexId qu = 0, qv = 0;
  std::vector<std::string> edge_tokens;
  auto* wit = app.add_subcommand("witness-e", "Does a set of edges separate u and v?");
  wit->add_flag("--check", check, "Verify against the oracle");
  wit->add_option("graph", graph_path)->required();
  wit->add_option("u", qu)->required();
  wit->add_option("v", qv)->required();
  wit->add_option("edges", edge_tokens, "Cut edges as x-y");

  // tree-witness
  VertexId root = 1;
  std::vector<VertexId> cut_vertices;
  auto* tw = app.add_subcommand("tree-witness", "Cut witnesses on a tree in O(k) per query");
  tw->add_option("--root", root, "Root vertex");
  tw->add_option("--vertices", cut_vertices, "Cut vertices");
  tw->add_option("--edges", edge_tokens, "Cut edges as x-y");
  tw->add_option("--script", script_path, "Script of WITNESS-E / WITNESS-V commands");
  tw->add_flag("--check", check, "Verify against the oracle");
  tw->add_option("graph", graph_path)->required();
  tw->add_option("u", qu);
  tw->add_option("v", qv);

  // certificate
  int cert_k = 1;
  auto* cert = app.add_subcommand("certificate", "Sparse k-connectivity certificate as an edge list");
  cert->add_option("--k", cert_k, "Connectivity parameter")->required()->check(CLI::PositiveNumber);
  cert->add_option("graph", graph_path)->required();

  // layout greedy | exhaustive | info
  auto* lay = app.add_subcommand("layout", "Build or inspect linear layouts");
  lay->require_subcommand(1);
  auto* lay_greedy = lay->add_subcommand("greedy", "Layout from the greedy path cover");
  lay_greedy->add_option("graph", graph_path)->required();
  auto* lay_exh = lay->add_subcommand("exhaustive", "Minimum-cutwidth layout (n <= 10)");
  lay_exh->add_option("graph", graph_path)->required();
  auto* lay_info = lay->add_subcommand("info", "Cutwidth, holes and per-gap profile");
  lay_info->add_option("graph", graph_path)->required();
  lay_info->add_option("layout", layout_path)->required();

  // labels mark | decode
  std::string label_path;
  bool all_holes = false;
  auto* lab = app.add_subcommand("labels", "Distributed vertex-cut labels");
  lab->require_subcommand(1);
  auto* lab_mark = lab->add_subcommand("mark", "Compute every vertex label");
  lab_mark->add_option("graph", graph_path)->required();
  lab_mark->add_option("layout", layout_path)->required();
  lab_mark->add_option("--out", label_path, "Label file to write")->required();
  lab_mark->add_flag("--all-holes", all_holes, "Store every hole in every label");
  auto* lab_dec = lab->add_subcommand("decode", "Decide from labels whether S separates u and v");
  lab_dec->add_option("labels", label_path)->required();
  lab_dec->add_option("u", qu)->required();
  lab_dec->add_option("v", qv)->required();
  lab_dec->add_option("cut", cut_vertices, "Cut vertices");

  // bench
  BenchConfig bench;
  std::string bench_algo = "et";
  auto* bch = app.add_subcommand("bench", "Per-operation timings as CSV");
  bch->add_option("--algo", bench_algo, "et | tree | layout")->check(CLI::IsMember({"et", "tree", "layout"}));
  bch->add_option("--n", bench.n, "Vertices")->check(CLI::PositiveNumber);
  bch->add_option("--k", bench.k, "Deletions");
  bch->add_option("--seed", bench.seed, "RNG seed");
  bch->add_option("--p", bench.p, "Edge probability (default 2 ln n / n)")->check(CLI::Range(0.0, 1.0));
  bch->add_option("--trials", bench.trials, "Independent trials")->check(CLI::PositiveNumber);
  bch->add_option("--jobs", bench.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bch->add_flag("--mask-timing", bench.mask_timing, "Print 0 for every timing");
  bch->add_flag("--bfs-tree", bench.bfs_tree, "Tree engine: use a BFS spanning tree");

  // oracle-check
  auto* orc = app.add_subcommand("oracle-check", "Run every applicable engine with --check");
  orc->add_option("--layout", layout_path, "Layout file for the layout engine");
  orc->add_option("graph", graph_path)->required();
  orc->add_option("script", script_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  SessionOptions session_options;
  session_options.uf_backend = backend == "uf";
  session_options.bfs_tree = bfs_tree;
  session_options.lazy_holes = lazy_holes;

  try {
    if (dec->parsed() || ldec->parsed()) {
      const Graph g = load_graph(graph_path);
      const Algo algo = ldec->parsed() ? Algo::Layout : parse_algo(algo_text);
      std::optional<LinearLayout> layout;
      if (!layout_path.empty()) layout = load_layout(layout_path, g);
      const auto commands = load_script(script_path);
      auto session = build_session(algo, g, layout ? &*layout : nullptr, session_options);
      execute_script(*session, g, commands, check, out);
    } else if (wit->parsed()) {
      const Graph g = load_graph(graph_path);
      std::vector<Edge> cut;
      for (const auto& tok : edge_tokens) cut.push_back(parse_edge_token(tok));
      bool answer = false;
      try {
        answer = k_edge_witness(g, qu, qv, cut);
      } catch (const std::logic_error& e) {
        throw ScriptViolation(0, e.what());
      }
      out << verdict(answer) << '\n';
      if (check && answer == oracle_connected(g, cut, {}, qu, qv)) {
        throw OracleMismatch("witness-e disagrees with the oracle");
      }
    } else if (tw->parsed()) {
      const Graph g = load_graph(graph_path);
      std::optional<LcaIndex> index;
      try {
        index.emplace(RootedTree(g, root));
      } catch (const std::invalid_argument& e) {
        throw InputError(graph_path + ": " + e.what());
      }
      // Session state: tree edges deleted so far. Witness queries run on the
      // forest that is left.
      std::vector<Edge> deleted;
      auto answer_vertices = [&](VertexId u, VertexId v, const std::vector<VertexId>& s, std::size_t line) {
        bool cut = false;
        try {
          cut = k_edge_witness_tree(*index, u, v, deleted) || k_vertex_witness_tree(*index, u, v, s);
        } catch (const std::logic_error& e) {
          throw ScriptViolation(line, e.what());
        }
        out << verdict(cut) << '\n';
        if (check && cut == oracle_connected(g, deleted, s, u, v)) {
          throw OracleMismatch("line " + std::to_string(line) + ": tree vertex witness disagrees with the oracle");
        }
      };
      auto answer_edges = [&](VertexId u, VertexId v, const std::vector<Edge>& s, std::size_t line) {
        bool cut = false;
        auto all = deleted;
        for (const Edge& e : s) {
          if (std::find(deleted.begin(), deleted.end(), e) != deleted.end()) {
            throw ScriptViolation(line, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " already deleted");
          }
          all.push_back(e);
        }
        try {
          cut = k_edge_witness_tree(*index, u, v, all);
        } catch (const std::logic_error& e) {
          throw ScriptViolation(line, e.what());
        }
        out << verdict(cut) << '\n';
        if (check && cut == oracle_connected(g, all, {}, u, v)) {
          throw OracleMismatch("line " + std::to_string(line) + ": tree edge witness disagrees with the oracle");
        }
      };
      if (!script_path.empty()) {
        for (const Command& c : load_script(script_path)) {
          switch (c.kind) {
            case Command::Kind::WitnessVertex:
              answer_vertices(c.u, c.v, c.vertices, c.line);
              break;
            case Command::Kind::WitnessEdge:
              answer_edges(c.u, c.v, c.edges, c.line);
              break;
            case Command::Kind::Delete: {
              const Edge e(c.u, c.v);
              if (!g.has_edge(e.u, e.v)) throw ScriptViolation(c.line, "not a tree edge");
              if (std::find(deleted.begin(), deleted.end(), e) != deleted.end()) {
                throw ScriptViolation(c.line, "edge already deleted");
              }
              deleted.push_back(e);
              break;
            }
            case Command::Kind::Query: {
              bool joined = false;
              try {
                joined = c.u == c.v || !k_edge_witness_tree(*index, c.u, c.v, deleted);
              } catch (const std::logic_error& e) {
                throw ScriptViolation(c.line, e.what());
              }
              out << (joined ? "true" : "false") << '\n';
              if (check && joined != oracle_connected(g, deleted, {}, c.u, c.v)) {
                throw OracleMismatch("line " + std::to_string(c.line) + ": tree query disagrees with the oracle");
              }
              break;
            }
            default:
              throw ScriptViolation(c.line, "tree-witness scripts hold DELETE, QUERY, WITNESS-E and WITNESS-V");
          }
        }
      } else {
        if (qu == 0 || qv == 0) throw ScriptViolation(0, "tree-witness needs u and v or --script");
        if (!edge_tokens.empty() && !cut_vertices.empty()) {
          throw ScriptViolation(0, "give either --vertices or --edges, not both");
        }
        if (!edge_tokens.empty()) {
          std::vector<Edge> cut;
          for (const auto& tok : edge_tokens) cut.push_back(parse_edge_token(tok));
          answer_edges(qu, qv, cut, 0);
        } else {
          answer_vertices(qu, qv, cut_vertices, 0);
        }
      }
    } else if (cert->parsed()) {
      const Graph g = load_graph(graph_path);
      write_edge_list(out, sparse_certificate(g, cert_k).subgraph);
    } else if (lay_greedy->parsed()) {
      const Graph g = load_graph(graph_path);
      write_layout(out, layout_from_path_cover(g, greedy_path_cover(g)));
    } else if (lay_exh->parsed()) {
      const Graph g = load_graph(graph_path);
      try {
        write_layout(out, exhaustive_min_cutwidth_layout(g));
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    } else if (lay_info->parsed()) {
      const Graph g = load_graph(graph_path);
      const LinearLayout layout = load_layout(layout_path, g);
      out << "n " << layout.n() << '\n' << "cutwidth " << layout.cutwidth() << '\n';
      out << "holes " << layout.holes().size();
      for (Position h : layout.holes()) out << ' ' << h;
      out << '\n' << "profile";
      for (std::size_t i = 1; i < layout.cutwidth_profile().size(); ++i) out << ' ' << layout.cutwidth_profile()[i];
      out << '\n';
    } else if (lab_mark->parsed()) {
      const Graph g = load_graph(graph_path);
      const LinearLayout layout = load_layout(layout_path, g);
      MarkOptions options;
      options.all_holes = all_holes;
      const auto labels = mark(g, layout, options);
      std::ofstream file(label_path, std::ios::binary);
      if (!file) throw InputError("cannot write " + label_path);
      write_labels(file, labels);
      std::size_t max_records = 0, max_bits = 0, total_bits = 0;
      for (const auto& l : labels) {
        max_records = std::max(max_records, l.record_count());
        const std::size_t bits = label_bits(l);
        max_bits = std::max(max_bits, bits);
        total_bits += bits;
      }
      out << "labels " << labels.size() << '\n'
          << "cutwidth " << layout.cutwidth() << '\n'
          << "holes " << layout.holes().size() << '\n'
          << "max_records " << max_records << '\n'
          << "max_bits " << max_bits << '\n'
          << "total_bits " << total_bits << '\n';
    } else if (lab_dec->parsed()) {
      std::vector<LabelB> labels;
      {
        std::istringstream in(slurp(label_path, true));
        try {
          labels = read_labels(in);
        } catch (const std::runtime_error& e) {
          throw InputError(label_path + ": " + e.what());
        }
      }
      std::map<VertexId, const LabelB*> by_id;
      for (const auto& l : labels) by_id[l.id] = &l;
      auto find = [&](VertexId id) -> const LabelB& {
        auto it = by_id.find(id);
        if (it == by_id.end()) throw ScriptViolation(0, "no label for vertex " + std::to_string(id));
        return *it->second;
      };
      std::vector<LabelB> cut;
      for (VertexId s : cut_vertices) cut.push_back(find(s));
      try {
        out << verdict(decode(find(qu), find(qv), cut)) << '\n';
      } catch (const std::invalid_argument& e) {
        throw ScriptViolation(0, e.what());
      }
    } else if (bch->parsed()) {
      bench.algo = parse_algo(bench_algo);
      try {
        run_bench(bench, out);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    } else if (orc->parsed()) {
      const Graph g = load_graph(graph_path);
      const auto commands = load_script(script_path);
      std::optional<LinearLayout> layout;
      if (!layout_path.empty()) layout = load_layout(layout_path, g);
      bool vertex_ops = false, edge_ops = false;
      for (const auto& c : commands) {
        vertex_ops |= c.kind == Command::Kind::DeleteVertex || c.kind == Command::Kind::WitnessVertex;
        edge_ops |= c.kind == Command::Kind::Delete || c.kind == Command::Kind::WitnessEdge;
      }
      if (vertex_ops && edge_ops) throw ScriptViolation(0, "no engine handles both edge and vertex operations");
      std::vector<Algo> algos;
      if (!vertex_ops) {
        algos.push_back(Algo::EulerTour);
        algos.push_back(Algo::Tree);
      }
      if (!edge_ops) algos.push_back(Algo::Layout);
      for (Algo algo : algos) {
        SessionOptions opts = session_options;
        for (bool uf : {false, true}) {
          opts.uf_backend = uf;
          auto session = build_session(algo, g, layout ? &*layout : nullptr, opts);
          std::ostringstream sink;
          const auto result = execute_script(*session, g, commands, true, sink);
          out << algo_name(algo) << (uf ? "/uf" : "/dfs") << " ok " << result.checks << " checks\n";
        }
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ScriptViolation& e) {
    err << "error: " << e.what() << '\n';
    return kScriptViolation;
  } catch (const OracleMismatch& e) {
    err << "mismatch: " << e.what() << '\n';
    return kOracleMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace dyncon::cli
