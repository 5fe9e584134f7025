#pragma once

// Simple labeled graphs, the edge-list and graph6 text formats, and the
// stacked triangulations (planar 3-trees) used as test graphs.

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ust/error.hpp"

namespace ust {

inline constexpr int kMaxVertices = 64;

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) throw OutOfRange("graphs are limited to 64 vertices");
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(int u, int v) {
    if (u == v) throw LoopEdge("loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw OutOfRange("edge endpoint outside vertex range");
    if (u > v) std::swap(u, v);
    if (adjacent(u, v))
      throw DuplicateEdge("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    edges_.emplace_back(u, v);
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  // Edge list sorted lexicographically; labels unchanged.
  Graph sorted() const {
    auto e = edges_;
    std::sort(e.begin(), e.end());
    return Graph(n_, e);
  }

  // New vertex a is old vertex perm[a].
  Graph relabeled(const std::vector<int>& perm) const {
    std::vector<int> inverse(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a) inverse[perm[a]] = a;
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges_) e.emplace_back(std::min(inverse[u], inverse[v]), std::max(inverse[u], inverse[v]));
    std::sort(e.begin(), e.end());
    return Graph(n_, e);
  }

  bool same_edges(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// ---- text formats --------------------------------------------------------

// "u1 v1 u2 v2 ... um vm"; the vertex count is one more than the largest
// label.
inline Graph parse_edge_list(std::string_view line) {
  std::vector<int> labels;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    long v = 0;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      if (!std::isdigit(static_cast<unsigned char>(line[i])))
        throw ParseError(i, "edge list token is not a nonnegative integer");
      v = v * 10 + (line[i] - '0');
      if (v >= kMaxVertices) throw ParseError(start, "vertex label exceeds 63");
      ++i;
    }
    labels.push_back(static_cast<int>(v));
  }
  if (labels.size() % 2 != 0) throw ParseError(line.size(), "edge list has an odd number of tokens");
  const int n = labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
  Graph g(n);
  for (std::size_t k = 0; k < labels.size(); k += 2) g.add_edge(labels[k], labels[k + 1]);
  return g;
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
  }
  return out;
}

// graph6: a size byte (n+63 for n <= 62), then the upper triangle of the
// adjacency matrix column by column, x(0,1) x(0,2) x(1,2) x(0,3) ..., packed
// six bits per byte (most significant first) and offset by 63.
inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(0, "empty graph6 string");
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] < 63 || text[i] > 126) throw ParseError(i, "byte outside the graph6 range 63..126");

  std::size_t pos = 0;
  int n = text[pos++] - 63;
  if (n == 63) {
    if (text.size() < 4) throw ParseError(text.size(), "truncated graph6 size field");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | (text[pos++] - 63);
  }
  if (n > kMaxVertices) throw ParseError(0, "graph6 vertex count exceeds 64");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need)
    throw ParseError(text.size() < pos + need ? text.size() : pos + need,
                     "graph6 body length " + std::to_string(text.size() - pos) + " does not match n=" + std::to_string(n));

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift : {12, 6, 0}) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = filled = 0;
      }
    }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

// One graph per nonempty line; graph6 when `graph6` is set, else edge lists.
inline std::vector<Graph> parse_graph_file(const std::string& text, bool graph6) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (!blank) {
      try {
        out.push_back(graph6 ? parse_graph6(line) : parse_edge_list(line));
      } catch (const ParseError& e) {
        throw ParseError(offset + e.offset, std::string("line ") + std::to_string(out.size() + 1) + ": " + e.what());
      }
    }
    offset += line.size() + 1;
  }
  return out;
}

// ---- structure -----------------------------------------------------------

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == g.order();
}

// Necessary conditions for a maximal planar graph. Planarity itself is
// settled downstream.
inline bool is_triangulation_candidate(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  if (g.size() != static_cast<std::size_t>(3 * n - 6)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 3) return false;
  return is_connected(g);
}

using Face = std::array<int, 3>;

inline Face make_face(int a, int b, int c) {
  Face f{a, b, c};
  std::sort(f.begin(), f.end());
  return f;
}

// A stacked triangulation relabeled so that {0,1,2} is the base triangle,
// vertex 3 completes K4, and every vertex k >= 4 is stacked into a face of
// the triangulation induced by 0..k-1. `steps[k-4]` is that face.
struct StackingOrder {
  Graph graph;
  std::vector<Face> steps;
  std::vector<Face> faces;
  std::vector<int> original;  // new label -> label in the input graph
};

// Faces of K4 on 0..3 plus the stacking steps, replayed. Returns nothing if a
// step's triangle is not a current face.
inline std::optional<std::vector<Face>> replay_stacking(const std::vector<Face>& steps) {
  std::vector<Face> faces{make_face(0, 1, 2), make_face(0, 1, 3), make_face(0, 2, 3), make_face(1, 2, 3)};
  int k = 4;
  for (const Face& f : steps) {
    auto it = std::find(faces.begin(), faces.end(), f);
    if (it == faces.end()) return std::nullopt;
    faces.erase(it);
    faces.push_back(make_face(f[0], f[1], k));
    faces.push_back(make_face(f[0], f[2], k));
    faces.push_back(make_face(f[1], f[2], k));
    ++k;
  }
  return faces;
}

// Peels degree-3 vertices with triangular neighbourhoods down to K4, then
// replays the insertions checking that each one goes into a face (this
// rejects non-planar 3-trees).
inline std::optional<StackingOrder> recognize_stacked(const Graph& g) {
  if (!is_triangulation_candidate(g)) return std::nullopt;
  const int n = g.order();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::uint64_t alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::vector<std::pair<int, std::uint64_t>> removed;
  for (int remaining = n; remaining > 4; --remaining) {
    int pick = -1;
    for (std::uint64_t a = alive; a && pick < 0; a &= a - 1) {
      const int v = std::countr_zero(a);
      const std::uint64_t nb = adj[v];
      if (std::popcount(nb) != 3) continue;
      const int x = std::countr_zero(nb);
      const int y = std::countr_zero(nb & (nb - 1));
      const int z = 63 - std::countl_zero(nb);
      if (((adj[x] >> y) & 1) && ((adj[x] >> z) & 1) && ((adj[y] >> z) & 1)) pick = v;
    }
    if (pick < 0) return std::nullopt;
    removed.emplace_back(pick, adj[pick]);
    alive &= ~(std::uint64_t{1} << pick);
    for (std::uint64_t nb = adj[pick]; nb; nb &= nb - 1) adj[std::countr_zero(nb)] &= ~(std::uint64_t{1} << pick);
    adj[pick] = 0;
  }

  StackingOrder so;
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (std::uint64_t a = alive; a; a &= a - 1) {
    const int v = std::countr_zero(a);
    label[v] = static_cast<int>(so.original.size());
    so.original.push_back(v);
  }
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    const auto [v, nb] = *it;
    int t[3], c = 0;
    for (std::uint64_t b = nb; b; b &= b - 1) t[c++] = label[std::countr_zero(b)];
    so.steps.push_back(make_face(t[0], t[1], t[2]));
    label[v] = static_cast<int>(so.original.size());
    so.original.push_back(v);
  }
  auto faces = replay_stacking(so.steps);
  if (!faces) return std::nullopt;
  so.faces = std::move(*faces);
  so.graph = g.relabeled(so.original);
  return so;
}

inline std::vector<Graph> filter_max_degree(const std::vector<Graph>& gs, int d, bool exact = false) {
  std::vector<Graph> out;
  for (const auto& g : gs) {
    const int m = g.max_degree();
    if (exact ? m == d : m <= d) out.push_back(g);
  }
  return out;
}

// Whether every face of the (unique) embedding of a stacked triangulation
// has a degree-3 vertex.
inline bool faces_all_have_degree3_vertex(const Graph& g) {
  auto so = recognize_stacked(g);
  if (!so) throw NotStacked("graph is not a stacked triangulation");
  for (const Face& f : so->faces) {
    bool ok = false;
    for (int v : f) ok = ok || so->graph.degree(v) == 3;
    if (!ok) return false;
  }
  return true;
}

// ---- canonical labeling --------------------------------------------------

namespace detail {

using Cells = std::vector<std::vector<int>>;

// Splits cells by (count of neighbours in every cell) until stable. The
// resulting ordered partition depends only on the isomorphism class of
// (graph, input partition).
inline void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    Cells next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> sig;
      for (int v : cell) {
        std::vector<int> counts(cells.size(), 0);
        for (std::uint64_t nb = g.neighbors(v); nb; nb &= nb - 1) ++counts[cell_of[std::countr_zero(nb)]];
        sig.emplace_back(std::move(counts), v);
      }
      std::sort(sig.begin(), sig.end());
      std::size_t start = next.size();
      next.push_back({sig[0].second});
      for (std::size_t k = 1; k < sig.size(); ++k) {
        if (sig[k].first != sig[k - 1].first) next.push_back({});
        next.back().push_back(sig[k].second);
      }
      if (next.size() - start > 1) changed = true;
    }
    cells = std::move(next);
  }
}

inline std::vector<std::uint64_t> code_for(const Graph& g, const Cells& cells) {
  const int n = g.order();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < cells.size(); ++c) pos[cells[c][0]] = static_cast<int>(c);
  std::vector<std::uint64_t> code(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (std::uint64_t nb = g.neighbors(v); nb; nb &= nb - 1) code[pos[v]] |= std::uint64_t{1} << pos[std::countr_zero(nb)];
  return code;
}

inline void canonical_search(const Graph& g, Cells cells, std::vector<std::uint64_t>& best,
                             std::vector<int>& best_order) {
  refine(g, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    auto code = code_for(g, cells);
    if (best.empty() || code < best) {
      best = std::move(code);
      best_order.clear();
      for (const auto& c : cells) best_order.push_back(c[0]);
    }
    return;
  }
  const std::size_t t = static_cast<std::size_t>(target - cells.begin());
  for (int v : cells[t]) {
    Cells child;
    child.reserve(cells.size() + 1);
    child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
    child.push_back({v});
    std::vector<int> rest;
    for (int w : cells[t])
      if (w != v) rest.push_back(w);
    child.push_back(std::move(rest));
    child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());
    canonical_search(g, std::move(child), best, best_order);
  }
}

}  // namespace detail

// Minimum adjacency-row encoding over the leaves of an individualization-
// refinement search. Equal for two graphs iff they are isomorphic.
struct CanonicalLabeling {
  std::vector<std::uint64_t> code;
  std::vector<int> order;  // canonical position -> vertex
};

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  CanonicalLabeling out;
  if (g.order() == 0) return out;
  detail::Cells cells(1);
  for (int v = 0; v < g.order(); ++v) cells[0].push_back(v);
  detail::canonical_search(g, std::move(cells), out.code, out.order);
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_labeling(a).code == canonical_labeling(b).code;
}

// ---- stacked triangulation families --------------------------------------

namespace detail {

struct Stacked {
  Graph graph;
  std::vector<Face> faces;
};

inline Stacked k4() {
  return {Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
          {make_face(0, 1, 2), make_face(0, 1, 3), make_face(0, 2, 3), make_face(1, 2, 3)}};
}

inline Stacked stack_into(const Stacked& s, std::size_t face) {
  const int k = s.graph.order();
  auto edges = s.graph.edges();
  const Face f = s.faces[face];
  for (int v : f) edges.emplace_back(v, k);
  Stacked out{Graph(k + 1, edges), s.faces};
  out.faces.erase(out.faces.begin() + static_cast<std::ptrdiff_t>(face));
  out.faces.push_back(make_face(f[0], f[1], k));
  out.faces.push_back(make_face(f[0], f[2], k));
  out.faces.push_back(make_face(f[1], f[2], k));
  return out;
}

}  // namespace detail

// All stacked triangulations on n vertices up to isomorphism, each labeled
// in stacking order (K4 on 0..3, vertex k stacked into a face on 0..k-1).
inline std::vector<Graph> generate_stacked(int n) {
  if (n < 4 || n > 16) throw OutOfRange("generate_stacked supports 4 <= n <= 16");
  std::vector<detail::Stacked> level{detail::k4()};
  for (int k = 4; k < n; ++k) {
    std::vector<detail::Stacked> next;
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& s : level)
      for (std::size_t f = 0; f < s.faces.size(); ++f) {
        auto child = detail::stack_into(s, f);
        if (seen.insert(canonical_labeling(child.graph).code).second) next.push_back(std::move(child));
      }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& s : level) out.push_back(s.graph.sorted());
  return out;
}

// All triangulations (maximal planar graphs) on n vertices up to
// isomorphism. Any two are connected by edge flips, so a breadth-first search
// over flips from a stacked triangulation reaches every class.
inline std::vector<Graph> generate_triangulations(int n) {
  if (n < 4 || n > 16) throw OutOfRange("generate_triangulations supports 4 <= n <= 16");
  auto start = detail::k4();
  while (start.graph.order() < n) start = detail::stack_into(start, 0);

  auto graph_of = [n](const std::vector<Face>& faces) {
    std::vector<std::pair<int, int>> e;
    for (const Face& f : faces)
      for (auto [a, b] : {std::pair{f[0], f[1]}, std::pair{f[0], f[2]}, std::pair{f[1], f[2]}}) e.emplace_back(a, b);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return Graph(n, e);
  };

  std::set<std::vector<std::uint64_t>> seen{canonical_labeling(start.graph).code};
  std::vector<std::vector<Face>> queue{start.faces};
  std::vector<Graph> out;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto faces = queue[head];
    const Graph g = graph_of(faces);
    out.push_back(g.sorted());
    for (auto [u, v] : g.edges()) {
      int shared[2], found = 0, other[2];
      for (int f = 0; f < static_cast<int>(faces.size()) && found < 2; ++f) {
        const Face& t = faces[f];
        if (std::find(t.begin(), t.end(), u) == t.end() || std::find(t.begin(), t.end(), v) == t.end()) continue;
        shared[found] = f;
        for (int w : t)
          if (w != u && w != v) other[found] = w;
        ++found;
      }
      if (found != 2 || g.adjacent(other[0], other[1])) continue;
      auto next = faces;
      next[shared[0]] = make_face(u, other[0], other[1]);
      next[shared[1]] = make_face(v, other[0], other[1]);
      if (seen.insert(canonical_labeling(graph_of(next)).code).second) queue.push_back(std::move(next));
    }
  }
  return out;
}

// Every labeled stacked triangulation in the inductive family: K4 on 0..3,
// then vertex k stacked into any face. Distinct face sequences give distinct
// labeled graphs; there are 2^(n-4) (n-3)! of them.
template <typename Visit>
void for_each_labeled_stacking(int n, Visit&& visit) {
  if (n < 4 || n > 16) throw OutOfRange("labeled stackings supported for 4 <= n <= 16");
  auto rec = [&](auto&& self, const detail::Stacked& s) -> void {
    if (s.graph.order() == n) {
      visit(s.graph);
      return;
    }
    for (std::size_t f = 0; f < s.faces.size(); ++f) self(self, detail::stack_into(s, f));
  };
  rec(rec, detail::k4());
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

}  // namespace ust
