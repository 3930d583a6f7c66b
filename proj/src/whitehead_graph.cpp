#include "wordlab/whitehead_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "wordlab/text.hpp"

namespace wordlab {

std::strong_ordering VertexId::operator<=>(const VertexId& o) const noexcept {
  if (auto c = kind <=> o.kind; c != 0) return c;
  if (auto c = position <=> o.position; c != 0) return c;
  if (is_cap()) return std::strong_ordering::equal;
  return letter <=> o.letter;
}

SegmentSpec::SegmentSpec(Word v, std::int64_t p, std::int64_t q)
    : axis(std::move(v)), start(p), end(q) {
  if (axis.empty() || !is_cyclically_reduced(axis)) {
    throw Error(ErrorKind::InvalidArgument,
                "segment axis must be nontrivial and cyclically reduced");
  }
  if (p > q) {
    throw Error(ErrorKind::InvalidArgument, "segment needs start <= end");
  }
}

WhiteheadGraph::WhiteheadGraph(Kind kind, std::vector<VertexId> vertices,
                               std::vector<Edge> edges)
    : kind_(kind), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorKind::InvalidArgument, "duplicate Whitehead graph vertex");
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> merged;
  for (const auto& e : edges) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) {
      throw Error(ErrorKind::InvalidArgument, "edge endpoint outside vertex set");
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::InvalidArgument, "Whitehead graph cannot contain loops");
    }
    if (e.multiplicity == 0) continue;
    merged[std::minmax(e.u, e.v)] += e.multiplicity;
  }
  adjacency_.resize(vertices_.size());
  for (const auto& [key, mult] : merged) {
    edges_.push_back(Edge{key.first, key.second, mult});
    adjacency_[key.first].push_back(key.second);
    adjacency_[key.second].push_back(key.first);
  }
}

std::optional<std::size_t> WhiteheadGraph::index_of(const VertexId& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t WhiteheadGraph::multiplicity(std::size_t u, std::size_t v) const {
  const auto [a, b] = std::minmax(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b),
                             [](const Edge& e, const std::pair<std::size_t, std::size_t>& k) {
                               return std::make_pair(e.u, e.v) < k;
                             });
  return (it != edges_.end() && it->u == a && it->v == b) ? it->multiplicity : 0;
}

std::size_t WhiteheadGraph::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : edges_) total += e.multiplicity;
  return total;
}

namespace {

/// Counts cyclic start positions of a label in w^inf and w^-inf over the
/// entries of a multiword.  Tables are built per label length on demand.
class LineIndex {
 public:
  explicit LineIndex(std::span<const CyclicWord> m) {
    for (const auto& w : m) {
      sources_.emplace_back(w.begin(), w.end());
      const auto inv = w.inverse();
      sources_.emplace_back(inv.begin(), inv.end());
      max_length_ = std::max(max_length_, w.size());
    }
  }

  std::size_t max_length() const noexcept { return max_length_; }

  std::size_t count(std::span<const Letter> label) {
    const auto& table = table_for(label.size());
    auto it = table.find(key(label));
    return it == table.end() ? 0 : it->second;
  }

 private:
  static std::string key(std::span<const Letter> s) {
    std::string k(s.size(), '\0');
    for (std::size_t i = 0; i < s.size(); ++i) k[i] = static_cast<char>(s[i].code());
    return k;
  }

  const std::unordered_map<std::string, std::size_t>& table_for(std::size_t len) {
    auto [it, fresh] = tables_.try_emplace(len);
    if (fresh) {
      std::string k(len, '\0');
      for (const auto& src : sources_) {
        const std::size_t n = src.size();
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < len; ++j) {
            k[j] = static_cast<char>(src[(i + j) % n].code());
          }
          ++it->second[k];
        }
      }
    }
    return it->second;
  }

  std::vector<std::vector<Letter>> sources_;
  std::size_t max_length_ = 0;
  std::unordered_map<std::size_t, std::unordered_map<std::string, std::size_t>> tables_;
};

void require_letters_in_basis(std::span<const CyclicWord> m, const Basis& basis) {
  for (const auto& w : m) {
    for (Letter l : w) {
      if (l.index() > basis.rank()) {
        throw Error(ErrorKind::InvalidArgument,
                    "letter index " + std::to_string(l.index()) + " exceeds basis rank " +
                        std::to_string(basis.rank()));
      }
    }
  }
}

std::vector<VertexId> segment_slots(const SegmentSpec& seg, const Basis& basis) {
  std::vector<VertexId> out;
  for (std::int64_t n = seg.start; n <= seg.end; ++n) {
    const Letter back = seg.label(n - 1).inverse();
    const Letter forward = seg.label(n);
    for (int c = 0; c < basis.letter_count(); ++c) {
      const Letter s = Letter::from_code(c);
      if (s != back && s != forward) out.push_back(VertexId::slot(n, s));
    }
  }
  return out;
}

/// Label of the shortest path from vertex a to vertex b (a < b), with the
/// infinite rays into caps truncated after `extension` extra axis letters.
std::vector<Letter> path_label(const VertexId& a, const VertexId& b,
                               const SegmentSpec& seg, std::int64_t extension) {
  std::vector<Letter> label;
  std::int64_t from = 0;
  std::int64_t to = 0;  // axis letters [from, to)
  if (a.kind == VertexId::Kind::CapMinus) {
    from = seg.start - 1 - extension;
  } else {
    label.push_back(a.letter.inverse());
    from = a.position;
  }
  to = b.kind == VertexId::Kind::CapPlus ? seg.end + 1 + extension : b.position;
  for (std::int64_t z = from; z < to; ++z) label.push_back(seg.label(z));
  if (b.kind != VertexId::Kind::CapPlus) label.push_back(b.letter);
  return label;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --sets_;
    }
  }
  std::size_t sets() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t sets_;
};

std::size_t count_components(std::size_t n,
                             const std::vector<std::vector<std::size_t>>& adj,
                             const std::vector<bool>* removed = nullptr) {
  DisjointSets sets(n);
  std::size_t dropped = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (removed && (*removed)[u]) {
      ++dropped;
      continue;
    }
    for (std::size_t v : adj[u]) {
      if (!removed || !(*removed)[v]) sets.unite(u, v);
    }
  }
  return sets.sets() - dropped;
}

}  // namespace

WhiteheadGraph classical_whitehead_graph(std::span<const CyclicWord> m,
                                         const Basis& basis) {
  if (m.empty()) {
    throw Error(ErrorKind::InvalidArgument, "Whitehead graph of an empty multiword");
  }
  require_letters_in_basis(m, basis);
  std::vector<VertexId> vertices;
  for (int c = 0; c < basis.letter_count(); ++c) {
    vertices.push_back(VertexId::direction(Letter::from_code(c)));
  }
  // Direction vertices sort by letter code, so index == code.
  std::vector<WhiteheadGraph::Edge> edges;
  for (const auto& w : m) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter a = w[i];
      const Letter b = w.at_cyclic(static_cast<std::int64_t>(i) + 1);
      edges.push_back({static_cast<std::size_t>(a.inverse().code()),
                       static_cast<std::size_t>(b.code()), 1});
    }
  }
  return WhiteheadGraph(WhiteheadGraph::Kind::Classical, std::move(vertices),
                        std::move(edges));
}

WhiteheadGraph classical_whitehead_graph(const Multiword& m, const Basis& basis) {
  const auto cores = m.cyclic_cores();
  return classical_whitehead_graph(std::span<const CyclicWord>(cores), basis);
}

WhiteheadGraph segment_whitehead_graph(std::span<const CyclicWord> m,
                                       const SegmentSpec& seg, const Basis& basis) {
  require_letters_in_basis(m, basis);
  const CyclicWord axis_core(seg.axis);
  require_letters_in_basis(std::span<const CyclicWord>(&axis_core, 1), basis);
  LineIndex index(m);
  std::vector<VertexId> vertices = segment_slots(seg, basis);
  vertices.push_back(VertexId::cap_minus());
  vertices.push_back(VertexId::cap_plus());
  std::sort(vertices.begin(), vertices.end());

  // A ray agrees with a periodic line forever once it agrees on
  // |v| + |w| letters.
  const auto extension = static_cast<std::int64_t>(seg.axis.size() + index.max_length());
  std::vector<WhiteheadGraph::Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const auto label = path_label(vertices[i], vertices[j], seg, extension);
      if (std::size_t mult = index.count(label); mult > 0) {
        edges.push_back({i, j, mult});
      }
    }
  }
  return WhiteheadGraph(WhiteheadGraph::Kind::Segment, std::move(vertices),
                        std::move(edges));
}

WhiteheadGraph restrict_to_core(const WhiteheadGraph& g) {
  if (g.kind() != WhiteheadGraph::Kind::Segment) {
    throw Error(ErrorKind::InvalidArgument, "restrict_to_core needs a segment graph");
  }
  std::vector<VertexId> kept;
  std::vector<std::size_t> remap(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (!g.vertices()[i].is_cap()) {
      remap[i] = kept.size();
      kept.push_back(g.vertices()[i]);
    }
  }
  std::vector<WhiteheadGraph::Edge> edges;
  for (const auto& e : g.edges()) {
    if (remap[e.u] != SIZE_MAX && remap[e.v] != SIZE_MAX) {
      edges.push_back({remap[e.u], remap[e.v], e.multiplicity});
    }
  }
  return WhiteheadGraph(WhiteheadGraph::Kind::Segment, std::move(kept), std::move(edges));
}

std::size_t core_component_count(std::span<const CyclicWord> m,
                                 const SegmentSpec& seg, const Basis& basis) {
  require_letters_in_basis(m, basis);
  LineIndex index(m);
  auto slots = segment_slots(seg, basis);
  std::sort(slots.begin(), slots.end());
  DisjointSets sets(slots.size());
  const std::int64_t width = seg.end - seg.start;
  for (std::int64_t span = 0; span <= width && sets.sets() > 1; ++span) {
    for (std::size_t i = 0; i < slots.size() && sets.sets() > 1; ++i) {
      for (std::size_t j = i + 1; j < slots.size(); ++j) {
        const auto gap = slots[j].position - slots[i].position;
        if (gap > span) break;
        if (gap < span || sets.find(i) == sets.find(j)) continue;
        if (index.count(path_label(slots[i], slots[j], seg, 0)) > 0) sets.unite(i, j);
      }
    }
  }
  return sets.sets();
}

std::size_t components(const WhiteheadGraph& g) {
  return count_components(g.vertex_count(), g.adjacency());
}

bool has_cut_vertex(const WhiteheadGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto& adj = g.adjacency();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  bool found = false;
  // Iterative DFS computing low-links.
  struct Frame {
    std::size_t v, parent, next;
  };
  for (std::size_t root = 0; root < n && !found; ++root) {
    if (disc[root]) continue;
    std::vector<Frame> stack{{root, SIZE_MAX, 0}};
    disc[root] = low[root] = ++timer;
    std::size_t root_children = 0;
    while (!stack.empty() && !found) {
      auto& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.next++];
        if (!disc[w]) {
          disc[w] = low[w] = ++timer;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          auto& up = stack.back();
          low[up.v] = std::min(low[up.v], low[done.v]);
          if (up.v != root && low[done.v] >= disc[up.v]) found = true;
        }
      }
    }
    if (root_children > 1) found = true;
  }
  return found;
}

bool has_cut_pair(const WhiteheadGraph& g, const VertexId& u, const VertexId& v) {
  const auto iu = g.index_of(u);
  const auto iv = g.index_of(v);
  if (!iu || !iv || *iu == *iv) {
    throw Error(ErrorKind::Precondition, "cut pair needs two distinct graph vertices");
  }
  if (g.vertex_count() < 4) return false;
  std::vector<bool> removed(g.vertex_count(), false);
  removed[*iu] = removed[*iv] = true;
  return count_components(g.vertex_count(), g.adjacency(), &removed) > 1;
}

bool is_complete(const WhiteheadGraph& g) {
  for (const auto& nbrs : g.adjacency()) {
    if (nbrs.size() + 1 != g.vertex_count()) return false;
  }
  return true;
}

bool is_planar(const WhiteheadGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(g.vertex_count());
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::string vertex_name(const VertexId& v) {
  switch (v.kind) {
    case VertexId::Kind::CapMinus:
      return "cap_minus";
    case VertexId::Kind::CapPlus:
      return "cap_plus";
    case VertexId::Kind::Direction:
      return std::string("d_") + text::letter_char(v.letter);
    case VertexId::Kind::Slot:
      return "s_" + std::to_string(v.position) + "_" + text::letter_char(v.letter);
  }
  return {};
}

std::string to_dot(const WhiteheadGraph& g) {
  std::string out = "graph whitehead {\n";
  for (const auto& v : g.vertices()) out += "  \"" + vertex_name(v) + "\";\n";
  for (const auto& e : g.edges()) {
    const std::string line = "  \"" + vertex_name(g.vertices()[e.u]) + "\" -- \"" +
                             vertex_name(g.vertices()[e.v]) + "\";\n";
    for (std::size_t k = 0; k < e.multiplicity; ++k) out += line;
  }
  out += "}\n";
  return out;
}

}  // namespace wordlab
