#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dyncon/certificate.hpp"
#include "dyncon/edge_decremental.hpp"
#include "dyncon/graph.hpp"
#include "dyncon/layout.hpp"
#include "dyncon/layout_decremental.hpp"
#include "dyncon/spanning_variant.hpp"
#include "dyncon/tree_witness.hpp"
#include "dyncon/vertex_labels.hpp"

namespace py = pybind11;
using namespace dyncon;

namespace {

using Pair = std::pair<VertexId, VertexId>;

std::vector<Edge> to_edges(const std::vector<Pair>& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

std::vector<Pair> to_pairs(const std::vector<Edge>& edges) {
  std::vector<Pair> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<Pair> to_pairs(const std::vector<PositionEdge>& edges) {
  std::vector<Pair> out;
  out.reserve(edges.size());
  for (const PositionEdge& e : edges) out.emplace_back(e.a, e.b);
  return out;
}

BackendKind backend_kind(const std::string& name) {
  if (name == "dfs") return BackendKind::Dfs;
  if (name == "uf") return BackendKind::UnionFindSnapshot;
  throw std::invalid_argument("backend must be 'dfs' or 'uf'");
}

// Owns the rooted tree the index was built from.
struct TreeIndex {
  TreeIndex(const Graph& tree, VertexId root) : index(RootedTree(tree, root)) {}
  LcaIndex index;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Decremental connectivity and cut witnesses";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<DeletedVertexError> deleted_error(m, "DeletedVertexError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const DeletedVertexError& e) {
      deleted_error(e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Pair>& edges) {
             const auto list = to_edges(edges);
             return Graph::from_edges(n, list);
           }),
           py::arg("n"), py::arg("edges") = std::vector<Pair>{})
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", [](const Graph& g) { return to_pairs(g.edges()); })
      .def("neighbors", &Graph::neighbors)
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("to_edge_list", [](const Graph& g) {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def(
      "oracle_connected",
      [](const Graph& g, const std::vector<Pair>& removed_edges, const std::vector<VertexId>& removed_vertices,
         VertexId u, VertexId v) { return oracle_connected(g, to_edges(removed_edges), removed_vertices, u, v); },
      py::arg("g"), py::arg("removed_edges"), py::arg("removed_vertices"), py::arg("u"), py::arg("v"));
  m.def("is_connected", &is_connected);

  py::class_<EdgeDecremental>(m, "EdgeDecremental")
      .def(py::init([](const Graph& g, const std::string& backend) {
             return EdgeDecremental(g, backend_kind(backend));
           }),
           py::arg("g"), py::arg("backend") = "dfs")
      .def("delete_edge", &EdgeDecremental::delete_edge)
      .def("connected", &EdgeDecremental::connected)
      .def("connected_all", &EdgeDecremental::connected_all)
      .def("is_deleted", &EdgeDecremental::is_deleted)
      .def_property_readonly("deletions", &EdgeDecremental::deletions)
      .def_property_readonly("h_size", [](const EdgeDecremental& s) { return s.aux().live_count(); })
      .def("copy", [](const EdgeDecremental& s) { return EdgeDecremental(s); });

  py::class_<TreeDecremental>(m, "TreeDecremental")
      .def(py::init([](const Graph& g, bool bfs_tree, const std::string& backend) {
             TreeVariantOptions options;
             options.bfs_tree = bfs_tree;
             options.backend = backend_kind(backend);
             return TreeDecremental(g, options);
           }),
           py::arg("g"), py::arg("bfs_tree") = false, py::arg("backend") = "dfs")
      .def("delete_edge", &TreeDecremental::delete_edge)
      .def("connected", &TreeDecremental::connected)
      .def("connected_all", &TreeDecremental::connected_all)
      .def("is_tree_edge", &TreeDecremental::is_tree_edge)
      .def("tree_edges", [](const TreeDecremental& s) { return to_pairs(s.tree().graph().edges()); })
      .def_property_readonly("h_size", [](const TreeDecremental& s) { return s.aux().live_count(); });

  m.def(
      "k_edge_witness",
      [](const Graph& g, VertexId u, VertexId v, const std::vector<Pair>& cut) {
        return k_edge_witness(g, u, v, to_edges(cut));
      },
      py::arg("g"), py::arg("u"), py::arg("v"), py::arg("cut"));
  m.def(
      "sparse_certificate", [](const Graph& g, int k) { return sparse_certificate(g, k).subgraph; }, py::arg("g"),
      py::arg("k"));
  m.def("min_degree_spanning_tree", [](const Graph& g) { return min_degree_spanning_tree(g).graph(); });
  m.def("bfs_spanning_tree", [](const Graph& g) { return bfs_spanning_tree(g).graph(); });

  py::class_<TreeIndex>(m, "TreeIndex")
      .def(py::init<const Graph&, VertexId>(), py::arg("tree"), py::arg("root") = 1)
      .def("lca", [](const TreeIndex& t, VertexId u, VertexId v) { return t.index.lca(u, v); })
      .def("is_ancestor", [](const TreeIndex& t, VertexId a, VertexId b) { return t.index.is_ancestor(a, b); })
      .def("vertex_witness",
           [](const TreeIndex& t, VertexId u, VertexId v, const std::vector<VertexId>& cut) {
             return k_vertex_witness_tree(t.index, u, v, cut);
           })
      .def("edge_witness", [](const TreeIndex& t, VertexId u, VertexId v, const std::vector<Pair>& cut) {
        return k_edge_witness_tree(t.index, u, v, to_edges(cut));
      });

  py::class_<LinearLayout>(m, "LinearLayout")
      .def(py::init<const Graph&, std::vector<VertexId>>(), py::arg("g"), py::arg("order"))
      .def_property_readonly("order", &LinearLayout::order)
      .def_property_readonly("cutwidth", &LinearLayout::cutwidth)
      .def_property_readonly("holes", &LinearLayout::holes)
      .def_property_readonly("profile",
                             [](const LinearLayout& l) {
                               const auto& p = l.cutwidth_profile();
                               return std::vector<int>(p.begin() + (p.empty() ? 0 : 1), p.end());
                             })
      .def("position", &LinearLayout::position)
      .def("holes_of_vertex", &LinearLayout::holes_of_vertex)
      .def("crossing_edges", [](const LinearLayout& l, VertexId u) { return to_pairs(l.crossing_edges(u)); })
      .def("to_text", [](const LinearLayout& l) {
        std::ostringstream out;
        write_layout(out, l);
        return out.str();
      });

  m.def("greedy_layout", [](const Graph& g) { return layout_from_path_cover(g, greedy_path_cover(g)); });
  m.def("exhaustive_layout", &exhaustive_min_cutwidth_layout);
  m.def("greedy_path_cover", &greedy_path_cover);

  py::class_<LayoutDecremental>(m, "LayoutDecremental")
      .def(py::init([](const Graph& g, const LinearLayout& layout, bool lazy_holes, const std::string& backend) {
             return LayoutDecremental(g, layout, {.lazy_holes = lazy_holes, .backend = backend_kind(backend)});
           }),
           py::arg("g"), py::arg("layout"), py::arg("lazy_holes") = false, py::arg("backend") = "dfs")
      .def("delete_vertex", &LayoutDecremental::delete_vertex)
      .def("connected", &LayoutDecremental::connected)
      .def("connected_all", &LayoutDecremental::connected_all)
      .def("is_deleted", &LayoutDecremental::is_deleted)
      .def_property_readonly("h_size", [](const LayoutDecremental& s) { return s.aux().live_count(); })
      .def("copy", [](const LayoutDecremental& s) { return LayoutDecremental(s); });

  py::class_<LabelA>(m, "SetLabel")
      .def_readonly("id", &LabelA::id)
      .def_readonly("runs", &LabelA::runs);
  m.def("mark_with_sets", [](const Graph& g, const std::vector<std::vector<Pair>>& sets) {
    std::vector<std::vector<Edge>> converted;
    for (const auto& s : sets) converted.push_back(to_edges(s));
    return mark_with_sets(g, converted);
  });
  m.def("decode_pair", &decode_pair);

  py::class_<LabelB>(m, "Label")
      .def_readonly("id", &LabelB::id)
      .def_readonly("pos", &LabelB::pos)
      .def_property_readonly("crossing", [](const LabelB& l) { return to_pairs(l.crossing); })
      .def_property_readonly("hole_gaps",
                             [](const LabelB& l) {
                               std::vector<Position> gaps;
                               for (const auto& h : l.holes) gaps.push_back(h.gap);
                               return gaps;
                             })
      .def_property_readonly("records", &LabelB::record_count)
      .def_property_readonly("bits", [](const LabelB& l) { return label_bits(l); })
      .def("__eq__", [](const LabelB& a, const LabelB& b) { return a == b; });

  m.def(
      "mark", [](const Graph& g, const LinearLayout& layout, bool all_holes) {
        return mark(g, layout, {.all_holes = all_holes});
      },
      py::arg("g"), py::arg("layout"), py::arg("all_holes") = false);
  m.def(
      "decode",
      [](const LabelB& lu, const LabelB& lv, const std::vector<LabelB>& cut) { return decode(lu, lv, cut); },
      py::arg("lu"), py::arg("lv"), py::arg("cut") = std::vector<LabelB>{});
  m.def("labels_to_bytes", [](const std::vector<LabelB>& labels) {
    std::ostringstream out;
    write_labels(out, labels);
    return py::bytes(out.str());
  });
  m.def("labels_from_bytes", [](const py::bytes& data) {
    std::istringstream in{std::string(data)};
    return read_labels(in);
  });
}
