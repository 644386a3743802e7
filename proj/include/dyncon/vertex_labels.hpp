#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "dyncon/graph.hpp"
#include "dyncon/layout.hpp"
#include "dyncon/union_find.hpp"

namespace dyncon {

// ---------------------------------------------------------------------------
// Scheme A: every vertex knows its own edge set S(u) at marking time.

/// Verdict for every vertex v, stored as runs over post-order ids of the
/// spanning tree. A bit of 1 means v is still reachable from u once S(u) is
/// removed, 0 means S(u) separates them.
struct LabelA {
  std::uint64_t marking = 0;
  VertexId id = 0;
  /// 1-based post-order index of id in the marking tree.
  int tree_id = 0;
  /// (first tree id of the run, bit), sorted by first tree id.
  std::vector<std::pair<int, bool>> runs;
};

/// `sets[i]` is S(i + 1). Throws std::invalid_argument if g is disconnected,
/// sets.size() != n, or some set holds a non-edge or a repeated edge.
std::vector<LabelA> mark_with_sets(const Graph& g, std::span<const std::vector<Edge>> sets);

/// True iff S(u) is a uv-cut. Throws std::invalid_argument for labels from
/// different markings.
bool decode_pair(const LabelA& lu, const LabelA& lv);

// ---------------------------------------------------------------------------
// Scheme B: the cut set is unknown at marking time.

struct HoleRecord {
  Position gap = 0;
  /// Every edge of g crossing the gap.
  std::vector<PositionEdge> edges;
  friend bool operator==(const HoleRecord&, const HoleRecord&) = default;
};

struct LabelB {
  std::uint64_t marking = 0;
  VertexId id = 0;
  int n = 0;
  Position pos = 0;
  /// Edges whose span contains pos, incident ones included.
  std::vector<PositionEdge> crossing;
  /// One record per hole spanned by a crossing edge (or per hole of the
  /// layout when marked with all_holes).
  std::vector<HoleRecord> holes;

  /// Edge records held: crossing edges plus every hole record's edges.
  [[nodiscard]] std::size_t record_count() const;
  friend bool operator==(const LabelB&, const LabelB&) = default;
};

struct MarkOptions {
  /// Store every hole of the layout in every label.
  bool all_holes = false;
};

/// Labels indexed by vertex id - 1. Throws std::invalid_argument if the
/// layout does not belong to g.
std::vector<LabelB> mark(const Graph& g, const LinearLayout& layout, MarkOptions options = {});

/// Union-find over the layout intervals left after removing S, built from
/// whatever edges the labels carry. Answers repeated queries without
/// re-decoding.
class DecodedCut {
 public:
  /// Throws std::invalid_argument on mixed markings or u, v in S.
  DecodedCut(const LabelB& lu, const LabelB& lv, std::span<const LabelB> cut);

  /// True iff S separates the two queried vertices.
  [[nodiscard]] bool separated() const { return !connected_positions(u_pos_, v_pos_); }
  /// Connectivity between two live layout positions. Throws
  /// std::invalid_argument for a removed position.
  [[nodiscard]] bool connected_positions(Position a, Position b) const;

  [[nodiscard]] std::size_t interval_count() const { return uf_.size(); }
  /// Distinct edges with both ends live that were fed to the union-find.
  [[nodiscard]] std::size_t unions() const { return unions_; }

 private:
  std::vector<int> interval_of_;  // per position, -1 when removed
  WorstCaseUnionFind uf_;
  Position u_pos_ = 0;
  Position v_pos_ = 0;
  std::size_t unions_ = 0;
};

/// True iff S is a uv-cut.
bool decode(const LabelB& lu, const LabelB& lv, std::span<const LabelB> cut);

/// Binary label file: "DCLB", u32 version, u32 count, then per label u32 id,
/// u32 payload length and the payload. All integers little-endian 32-bit.
void write_labels(std::ostream& out, std::span<const LabelB> labels);
/// Throws std::runtime_error on a malformed file.
std::vector<LabelB> read_labels(std::istream& in);
/// Payload size of one label in bits.
std::size_t label_bits(const LabelB& label);

}  // namespace dyncon
