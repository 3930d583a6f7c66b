#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

/// Vertex of a Whitehead graph: a direction at the base vertex (classical
/// graph), a slot (n, s) = edge labelled s leaving the segment at position n,
/// or one of the two caps containing the rest of the axis.
struct VertexId {
  enum class Kind : std::uint8_t { CapMinus, Direction, Slot, CapPlus };

  Kind kind = Kind::Direction;
  std::int64_t position = 0;
  Letter letter;

  static VertexId direction(Letter l) { return {Kind::Direction, 0, l}; }
  static VertexId slot(std::int64_t n, Letter s) { return {Kind::Slot, n, s}; }
  static VertexId cap_minus() { return {Kind::CapMinus, 0, Letter()}; }
  static VertexId cap_plus() { return {Kind::CapPlus, 0, Letter()}; }

  bool is_cap() const noexcept {
    return kind == Kind::CapMinus || kind == Kind::CapPlus;
  }

  bool operator==(const VertexId&) const = default;
  std::strong_ordering operator<=>(const VertexId& o) const noexcept;
};

/// Segment K = gamma|[start, end] of the axis of `axis`, whose edge at
/// integer z carries the letter axis[z mod |axis|].  The axis word is kept
/// as given (not rotated) so positions follow the caller's labelling.
struct SegmentSpec {
  Word axis;
  std::int64_t start = 0;
  std::int64_t end = 0;

  /// Throws unless v is nontrivial, cyclically reduced and p <= q.
  SegmentSpec(Word v, std::int64_t p, std::int64_t q);
  Letter label(std::int64_t z) const {
    const auto n = static_cast<std::int64_t>(axis.size());
    return axis[static_cast<std::size_t>(((z % n) + n) % n)];
  }
};

/// Finite loop-free multigraph with a sorted vertex list.
class WhiteheadGraph {
 public:
  enum class Kind { Classical, Segment };

  struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    std::size_t multiplicity = 0;
    bool operator==(const Edge&) const = default;
  };

  /// Edges are aggregated by endpoint pair; loops and out-of-range endpoints
  /// throw.
  WhiteheadGraph(Kind kind, std::vector<VertexId> vertices, std::vector<Edge> edges);

  Kind kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  /// Sorted by (u, v) with u < v.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::optional<std::size_t> index_of(const VertexId& v) const;
  std::size_t multiplicity(std::size_t u, std::size_t v) const;
  std::size_t total_multiplicity() const;
  /// Simple-graph adjacency lists.
  const std::vector<std::vector<std::size_t>>& adjacency() const noexcept {
    return adjacency_;
  }

 private:
  Kind kind_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Classical graph over one vertex: an edge Direction(x^-1) -- Direction(y)
/// for every cyclic occurrence of xy.  Entries must be cyclic words.
WhiteheadGraph classical_whitehead_graph(std::span<const CyclicWord> m,
                                         const Basis& basis);
WhiteheadGraph classical_whitehead_graph(const Multiword& m, const Basis& basis);

/// Wh(K) for a segment of an axis, caps included.  Two complementary
/// components are joined once per line of the multiword crossing the
/// shortest path between them, i.e. per cyclic occurrence of the path label
/// in w^inf or w^-inf.
WhiteheadGraph segment_whitehead_graph(std::span<const CyclicWord> m,
                                       const SegmentSpec& seg, const Basis& basis);

/// Drops both caps; throws on a classical graph.
WhiteheadGraph restrict_to_core(const WhiteheadGraph& g);

/// Component count of W(K) without materialising the graph: edges are
/// merged shortest-span first and the scan stops once one component is
/// left.  Agrees with components(restrict_to_core(segment_whitehead_graph)).
std::size_t core_component_count(std::span<const CyclicWord> m,
                                 const SegmentSpec& seg, const Basis& basis);

std::size_t components(const WhiteheadGraph& g);
bool has_cut_vertex(const WhiteheadGraph& g);
bool has_cut_pair(const WhiteheadGraph& g, const VertexId& u, const VertexId& v);
/// True iff every two distinct vertices are adjacent.
bool is_complete(const WhiteheadGraph& g);

/// Planarity of the underlying simple graph.  Necessary, not sufficient,
/// for geometricity.
bool is_planar(const WhiteheadGraph& g);

/// DOT text with quoted vertex names d_<letter>, s_<n>_<letter>, cap_minus,
/// cap_plus; one line per parallel edge.
std::string to_dot(const WhiteheadGraph& g);
std::string vertex_name(const VertexId& v);

}  // namespace wordlab
