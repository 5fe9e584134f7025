#pragma once

// Plane straight-line embeddability of a graph on an order type, as CNF.
//
// Variables: M(v,p) "vertex v sits on point p" and A(p,q) "segment pq is
// drawn". Clauses:
//   every vertex on some point; no vertex on two points; no point hosting
//   two vertices; when |V| = |P| also every point used;
//   M(u,p) & M(v,q) -> A(pq) for each edge uv;
//   not both A(pq) and A(rs) for each crossing pair.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ust/chirotope.hpp"
#include "ust/error.hpp"
#include "ust/graph.hpp"
#include "ust/io.hpp"
#include "ust/sat.hpp"

namespace ust {

struct CnfFormula {
  int vertices = 0;
  int points = 0;
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int m_var(int v, int p) const { return v * points + p + 1; }

  int a_var(int p, int q) const {
    if (p > q) std::swap(p, q);
    return vertices * points + binom2(q) + p + 1;
  }
};

inline CnfFormula encode_embedding(const Graph& g, const OrderType& ot) {
  const int nv = g.order();
  const int np = ot.size();
  if (nv > np)
    throw TooManyVertices("graph has " + std::to_string(nv) + " vertices but only " + std::to_string(np) + " points");
  CnfFormula f;
  f.vertices = nv;
  f.points = np;
  f.num_vars = nv * np + binom2(np);
  auto& cl = f.clauses;

  for (int v = 0; v < nv; ++v) {
    std::vector<int> some;
    for (int p = 0; p < np; ++p) some.push_back(f.m_var(v, p));
    cl.push_back(std::move(some));
    for (int p = 0; p < np; ++p)
      for (int q = p + 1; q < np; ++q) cl.push_back({-f.m_var(v, p), -f.m_var(v, q)});
  }
  for (int p = 0; p < np; ++p)
    for (int u = 0; u < nv; ++u)
      for (int v = u + 1; v < nv; ++v) cl.push_back({-f.m_var(u, p), -f.m_var(v, p)});
  if (nv == np && nv > 0)
    for (int p = 0; p < np; ++p) {
      std::vector<int> used;
      for (int v = 0; v < nv; ++v) used.push_back(f.m_var(v, p));
      cl.push_back(std::move(used));
    }

  for (auto [u, v] : g.edges())
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q)
        if (p != q) cl.push_back({-f.m_var(u, p), -f.m_var(v, q), f.a_var(p, q)});

  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b)
      for (int c = b + 1; c < np; ++c)
        for (int d = c + 1; d < np; ++d) {
          const int pairs[3][4] = {{a, b, c, d}, {a, c, b, d}, {a, d, b, c}};
          for (const auto& s : pairs)
            if (segments_cross(ot, s[0], s[1], s[2], s[3])) cl.push_back({-f.a_var(s[0], s[1]), -f.a_var(s[2], s[3])});
        }
  return f;
}

// Vertex v is drawn on point assignment[v].
struct EmbeddingWitness {
  std::vector<int> assignment;
};

struct WitnessViolation {
  enum class Kind { incomplete, out_of_range, shared_point, crossing } kind;
  // shared_point: two vertices; crossing: indices of two edges in g.edges().
  int first = -1;
  int second = -1;

  std::string describe(const Graph& g) const {
    switch (kind) {
      case Kind::incomplete: return "witness does not cover every vertex";
      case Kind::out_of_range: return "vertex " + std::to_string(first) + " mapped outside the point set";
      case Kind::shared_point:
        return "vertices " + std::to_string(first) + " and " + std::to_string(second) + " share a point";
      case Kind::crossing: {
        const auto e1 = g.edges()[static_cast<std::size_t>(first)], e2 = g.edges()[static_cast<std::size_t>(second)];
        return "edges " + std::to_string(e1.first) + "-" + std::to_string(e1.second) + " and " +
               std::to_string(e2.first) + "-" + std::to_string(e2.second) + " cross";
      }
    }
    return {};
  }
};

// Checks injectivity and pairwise non-crossing of the drawn edges using only
// triple orientations.
inline std::optional<WitnessViolation> verify_witness(const Graph& g, const OrderType& ot, const EmbeddingWitness& w) {
  using K = WitnessViolation::Kind;
  if (w.assignment.size() != static_cast<std::size_t>(g.order())) return WitnessViolation{K::incomplete};
  std::vector<int> host(static_cast<std::size_t>(ot.size()), -1);
  for (int v = 0; v < g.order(); ++v) {
    const int p = w.assignment[v];
    if (p < 0 || p >= ot.size()) return WitnessViolation{K::out_of_range, v};
    if (host[p] >= 0) return WitnessViolation{K::shared_point, host[p], v};
    host[p] = v;
  }
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const int p = w.assignment[edges[i].first], q = w.assignment[edges[i].second];
      const int r = w.assignment[edges[j].first], s = w.assignment[edges[j].second];
      if (p == r || p == s || q == r || q == s) continue;
      if (segments_cross(ot, p, q, r, s)) return WitnessViolation{K::crossing, static_cast<int>(i), static_cast<int>(j)};
    }
  return std::nullopt;
}

struct EmbedOptions {
  std::int64_t conflict_budget = -1;  // < 0: unlimited
};

// Witness if g has a plane straight-line drawing on ot, nothing otherwise.
inline std::optional<EmbeddingWitness> decide_embeddable(const Graph& g, const OrderType& ot,
                                                         const EmbedOptions& opts = {}) {
  const CnfFormula f = encode_embedding(g, ot);
  sat::Solver solver;
  solver.reserve_vars(f.num_vars);
  for (const auto& c : f.clauses)
    if (!solver.add_clause(c)) return std::nullopt;
  const auto r = solver.solve(opts.conflict_budget);
  if (r == sat::Result::unknown)
    throw SolverTimeout("conflict budget of " + std::to_string(opts.conflict_budget) + " exhausted");
  if (r == sat::Result::unsat) return std::nullopt;

  EmbeddingWitness w;
  w.assignment.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v)
    for (int p = 0; p < ot.size(); ++p)
      if (solver.model_value(f.m_var(v, p))) w.assignment[v] = p;
  if (auto bad = verify_witness(g, ot, w)) throw WitnessInvalid("solver witness rejected: " + bad->describe(g));
  return w;
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    for (int lit : c) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

inline void export_dimacs(const CnfFormula& f, const std::filesystem::path& path) { io::write_text(path, to_dimacs(f)); }

}  // namespace ust
