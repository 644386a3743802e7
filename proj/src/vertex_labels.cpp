#include "dyncon/vertex_labels.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>

#include "dyncon/spanning_variant.hpp"

namespace dyncon {

namespace {

// FNV-1a, 64 bit.
class Fingerprint {
 public:
  void mix(std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      state_ ^= (value >> (8 * i)) & 0xffU;
      state_ *= 0x100000001b3ULL;
    }
  }
  void mix_graph(const Graph& g) {
    mix(g.n());
    mix(g.m());
    for (const Edge& e : g.edges()) mix(e.key());
  }
  [[nodiscard]] std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

void require_same_marking(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw std::invalid_argument("labels come from different markings");
}

}  // namespace

std::vector<LabelA> mark_with_sets(const Graph& g, std::span<const std::vector<Edge>> sets) {
  if (sets.size() != g.n()) throw std::invalid_argument("need one edge set per vertex");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::set<Edge> seen;
    for (const Edge& e : sets[i]) {
      if (!g.has_edge(e.u, e.v)) {
        throw std::invalid_argument("S(" + std::to_string(i + 1) + ") holds non-edge {" +
                                    std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      }
      if (!seen.insert(e).second) {
        throw std::invalid_argument("S(" + std::to_string(i + 1) + ") repeats an edge");
      }
    }
  }

  const RootedTree tree = min_degree_spanning_tree(g);
  std::vector<int> tree_id(g.n() + 1, 0);
  const auto& post = tree.postorder();
  for (std::size_t i = 0; i < post.size(); ++i) tree_id[post[i]] = static_cast<int>(i + 1);

  Fingerprint fp;
  fp.mix_graph(g);
  for (const auto& s : sets) {
    fp.mix(s.size());
    for (const Edge& e : s) fp.mix(e.key());
  }

  std::vector<LabelA> labels(g.n());
  for (VertexId u = 1; u <= static_cast<VertexId>(g.n()); ++u) {
    TreeVariantOptions options;
    options.tree = tree;
    options.backend = BackendKind::UnionFindSnapshot;
    TreeDecremental engine(g, options);
    for (const Edge& e : sets[u - 1]) engine.delete_edge(e.u, e.v);

    LabelA& label = labels[u - 1];
    label.marking = fp.value();
    label.id = u;
    label.tree_id = tree_id[u];
    for (std::size_t i = 0; i < post.size(); ++i) {
      const bool bit = engine.connected(u, post[i]);
      if (label.runs.empty() || label.runs.back().second != bit) {
        label.runs.emplace_back(static_cast<int>(i + 1), bit);
      }
    }
  }
  return labels;
}

bool decode_pair(const LabelA& lu, const LabelA& lv) {
  require_same_marking(lu.marking, lv.marking);
  auto it = std::upper_bound(lu.runs.begin(), lu.runs.end(), lv.tree_id,
                             [](int id, const std::pair<int, bool>& run) { return id < run.first; });
  if (it == lu.runs.begin()) throw std::invalid_argument("tree id not covered by label");
  return !std::prev(it)->second;
}

std::size_t LabelB::record_count() const {
  std::size_t count = crossing.size();
  for (const auto& h : holes) count += h.edges.size();
  return count;
}

std::vector<LabelB> mark(const Graph& g, const LinearLayout& layout, MarkOptions options) {
  if (layout.n() != g.n()) throw std::invalid_argument("layout does not belong to the graph");
  std::vector<PositionEdge> expected;
  expected.reserve(g.m());
  for (const Edge& e : g.edges()) {
    Position a = layout.position(e.u), b = layout.position(e.v);
    expected.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(expected.begin(), expected.end());
  if (expected != layout.position_edges()) throw std::invalid_argument("layout does not belong to the graph");

  Fingerprint fp;
  fp.mix_graph(g);
  for (VertexId v : layout.order()) fp.mix(static_cast<std::uint64_t>(v));
  fp.mix(options.all_holes ? 1 : 0);

  std::vector<HoleRecord> records;
  for (Position h : layout.holes()) records.push_back({h, layout.edges_crossing_gap(h)});

  std::vector<LabelB> labels(g.n());
  for (VertexId u = 1; u <= static_cast<VertexId>(g.n()); ++u) {
    LabelB& label = labels[u - 1];
    label.marking = fp.value();
    label.id = u;
    label.n = static_cast<int>(g.n());
    label.pos = layout.position(u);
    label.crossing = layout.crossing_edges(u);
    if (options.all_holes) {
      label.holes = records;
    } else {
      const auto mine = layout.holes_of_vertex(u);
      for (const auto& r : records) {
        if (std::binary_search(mine.begin(), mine.end(), r.gap)) label.holes.push_back(r);
      }
    }
  }
  return labels;
}

DecodedCut::DecodedCut(const LabelB& lu, const LabelB& lv, std::span<const LabelB> cut)
    : u_pos_(lu.pos), v_pos_(lv.pos) {
  require_same_marking(lu.marking, lv.marking);
  if (lu.n != lv.n) throw std::invalid_argument("labels disagree on n");
  for (const LabelB& s : cut) {
    require_same_marking(lu.marking, s.marking);
    if (s.id == lu.id || s.id == lv.id) throw std::invalid_argument("query vertex inside the cut set");
  }
  const int n = lu.n;

  std::vector<char> removed(n + 2, 0);
  for (const LabelB& s : cut) removed.at(s.pos) = 1;

  std::vector<char> hole(n + 1, 0);
  std::set<PositionEdge> known;
  auto learn = [&](const LabelB& label) {
    known.insert(label.crossing.begin(), label.crossing.end());
    for (const auto& h : label.holes) {
      hole.at(h.gap) = 1;
      known.insert(h.edges.begin(), h.edges.end());
    }
  };
  learn(lu);
  learn(lv);
  for (const LabelB& s : cut) learn(s);

  // Sweep 1..n: a new interval starts after a removed position or a known hole.
  interval_of_.assign(n + 1, -1);
  int count = 0;
  bool open = false;
  for (Position p = 1; p <= n; ++p) {
    if (removed[p]) {
      open = false;
      continue;
    }
    if (!open || hole[p - 1]) ++count;
    open = true;
    interval_of_[p] = count - 1;
  }
  uf_.reset(static_cast<std::size_t>(count));

  for (const PositionEdge& e : known) {
    if (removed.at(e.a) || removed.at(e.b)) continue;
    uf_.unite(interval_of_[e.a], interval_of_[e.b]);
    ++unions_;
  }
}

bool DecodedCut::connected_positions(Position a, Position b) const {
  if (a < 1 || b < 1 || static_cast<std::size_t>(a) >= interval_of_.size() ||
      static_cast<std::size_t>(b) >= interval_of_.size()) {
    throw std::out_of_range("position out of range");
  }
  if (interval_of_[a] < 0 || interval_of_[b] < 0) throw std::invalid_argument("position removed by the cut");
  return uf_.same(interval_of_[a], interval_of_[b]);
}

bool decode(const LabelB& lu, const LabelB& lv, std::span<const LabelB> cut) {
  return DecodedCut(lu, lv, cut).separated();
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

constexpr std::array<char, 4> kMagic{'D', 'C', 'L', 'B'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::vector<unsigned char>& buf, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<unsigned char>((x >> (8 * i)) & 0xffU));
}

std::vector<unsigned char> encode_payload(const LabelB& l) {
  std::vector<unsigned char> buf;
  put_u32(buf, static_cast<std::uint32_t>(l.marking & 0xffffffffU));
  put_u32(buf, static_cast<std::uint32_t>(l.marking >> 32));
  put_u32(buf, static_cast<std::uint32_t>(l.n));
  put_u32(buf, static_cast<std::uint32_t>(l.pos));
  put_u32(buf, static_cast<std::uint32_t>(l.crossing.size()));
  for (const auto& e : l.crossing) {
    put_u32(buf, static_cast<std::uint32_t>(e.a));
    put_u32(buf, static_cast<std::uint32_t>(e.b));
  }
  put_u32(buf, static_cast<std::uint32_t>(l.holes.size()));
  for (const auto& h : l.holes) {
    put_u32(buf, static_cast<std::uint32_t>(h.gap));
    put_u32(buf, static_cast<std::uint32_t>(h.edges.size()));
    for (const auto& e : h.edges) {
      put_u32(buf, static_cast<std::uint32_t>(e.a));
      put_u32(buf, static_cast<std::uint32_t>(e.b));
    }
  }
  return buf;
}

class Reader {
 public:
  Reader(const unsigned char* data, std::size_t size) : data_(data), size_(size) {}
  std::uint32_t u32() {
    if (size_ - at_ < 4) throw std::runtime_error("label file truncated");
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(data_[at_ + i]) << (8 * i);
    at_ += 4;
    return x;
  }
  // Guards counts against the bytes actually left.
  std::uint32_t count(std::size_t words_each) {
    std::uint32_t c = u32();
    if (static_cast<std::uint64_t>(c) * words_each * 4 > size_ - at_) {
      throw std::runtime_error("label file count exceeds payload");
    }
    return c;
  }
  [[nodiscard]] bool done() const { return at_ == size_; }

 private:
  const unsigned char* data_;
  std::size_t size_;
  std::size_t at_ = 0;
};

PositionEdge read_edge(Reader& r, int n) {
  PositionEdge e{static_cast<Position>(r.u32()), static_cast<Position>(r.u32())};
  if (e.a < 1 || e.b > n || e.a >= e.b) throw std::runtime_error("label edge out of range");
  return e;
}

}  // namespace

void write_labels(std::ostream& out, std::span<const LabelB> labels) {
  std::vector<unsigned char> buf(kMagic.begin(), kMagic.end());
  put_u32(buf, kVersion);
  put_u32(buf, static_cast<std::uint32_t>(labels.size()));
  for (const LabelB& l : labels) {
    auto payload = encode_payload(l);
    put_u32(buf, static_cast<std::uint32_t>(l.id));
    put_u32(buf, static_cast<std::uint32_t>(payload.size()));
    buf.insert(buf.end(), payload.begin(), payload.end());
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

std::vector<LabelB> read_labels(std::istream& in) {
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw std::runtime_error("not a label file");
  }
  Reader head(bytes.data() + 4, bytes.size() - 4);
  if (head.u32() != kVersion) throw std::runtime_error("unsupported label file version");
  const std::uint32_t count = head.count(2);

  std::vector<LabelB> labels;
  labels.reserve(count);
  std::size_t offset = 12;
  for (std::uint32_t i = 0; i < count; ++i) {
    Reader rec(bytes.data() + offset, bytes.size() - offset);
    LabelB l;
    l.id = static_cast<VertexId>(rec.u32());
    const std::uint32_t len = rec.count(0);
    if (len > bytes.size() - offset - 8) throw std::runtime_error("label payload truncated");
    Reader p(bytes.data() + offset + 8, len);
    l.marking = p.u32();
    l.marking |= static_cast<std::uint64_t>(p.u32()) << 32;
    l.n = static_cast<int>(p.u32());
    l.pos = static_cast<Position>(p.u32());
    if (l.n < 1 || l.pos < 1 || l.pos > l.n || l.id < 1 || l.id > l.n) {
      throw std::runtime_error("label header out of range");
    }
    const std::uint32_t ncross = p.count(2);
    for (std::uint32_t j = 0; j < ncross; ++j) l.crossing.push_back(read_edge(p, l.n));
    const std::uint32_t nholes = p.count(2);
    for (std::uint32_t j = 0; j < nholes; ++j) {
      HoleRecord h;
      h.gap = static_cast<Position>(p.u32());
      if (h.gap < 1 || h.gap >= l.n) throw std::runtime_error("hole gap out of range");
      const std::uint32_t ne = p.count(2);
      for (std::uint32_t k = 0; k < ne; ++k) h.edges.push_back(read_edge(p, l.n));
      l.holes.push_back(std::move(h));
    }
    if (!p.done()) throw std::runtime_error("trailing bytes in label payload");
    labels.push_back(std::move(l));
    offset += 8 + len;
  }
  if (offset != bytes.size()) throw std::runtime_error("trailing bytes after labels");
  return labels;
}

std::size_t label_bits(const LabelB& label) { return encode_payload(label).size() * 8; }

}  // namespace dyncon
