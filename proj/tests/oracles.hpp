#pragma once

// Slow reference implementations the library is checked against. Nothing
// here calls the code under test except where noted.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ust/chirotope.hpp"
#include "ust/graph.hpp"

namespace oracle {

using ust::OrderType;
using ust::Point;
using ust::PointSet;

// All sign vectors on n points with chi(0,i,j) = + that satisfy the
// signotope condition on every 4-subset, reduced by canonical_form. Every
// abstract order type has such a labeling (point 0 extreme, the rest sorted
// around it), so the size of the result is the number of abstract order
// types on n points.
inline std::set<std::vector<std::uint8_t>> all_order_types(int n) {
  const int t = static_cast<int>(ust::binom3(n));
  std::vector<std::int8_t> s(static_cast<std::size_t>(t), 0);
  std::vector<std::array<int, 3>> triples(static_cast<std::size_t>(t));
  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) triples[ust::triple_rank(i, j, k)] = {i, j, k};
  auto sign = [&](int i, int j, int k) { return s[ust::triple_rank(i, j, k)]; };
  // In colex order bcd is the last triple of a quadruple a<b<c<d, so
  // filling (i,j,k) completes exactly the quadruples (a,i,j,k), a < i.
  auto ok_at = [&](int r) {
    const auto [i, j, k] = triples[r];
    for (int a = 0; a < i; ++a) {
      const int q[4] = {sign(a, i, j), sign(a, i, k), sign(a, j, k), sign(i, j, k)};
      int changes = 0;
      for (int x = 1; x < 4; ++x)
        if (q[x] != q[x - 1]) ++changes;
      if (changes > 1) return false;
    }
    return true;
  };
  std::set<std::vector<std::uint8_t>> out;
  std::function<void(int)> rec = [&](int r) {
    if (r == t) {
      out.insert(ust::canonical_form(OrderType(n, s)).entries);
      return;
    }
    const auto [i, j, k] = triples[r];
    for (std::int8_t v : {std::int8_t{1}, std::int8_t{-1}}) {
      if (i == 0 && v < 0) continue;
      s[r] = v;
      if (ok_at(r)) rec(r + 1);
    }
    s[r] = 0;
  };
  rec(0);
  return out;
}

inline std::vector<OrderType> order_types(int n) {
  if (n == 3) return {ust::order_type_from_lambda({3, {0}})};
  std::vector<OrderType> out;
  for (const auto& e : all_order_types(n)) out.push_back(ust::order_type_from_lambda({n, e}));
  return out;
}

// Every graph on n vertices with 3n-6 edges, minimum degree 3, connected;
// planar or not.
inline std::vector<ust::Graph> triangulation_candidates(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<char> pick(pairs.size(), 0);
  std::fill(pick.begin(), pick.begin() + (3 * n - 6), 1);
  std::vector<ust::Graph> out;
  do {
    ust::Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pick[k]) g.add_edge(pairs[k].first, pairs[k].second);
    if (ust::is_triangulation_candidate(g)) out.push_back(g);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Plane straight-line embedding by trying every injection of vertices into
// points; crossings from the orientation predicate on the chirotope.
inline bool embeds_bruteforce(const ust::Graph& g, const OrderType& ot) {
  const int nv = g.order(), np = ot.size();
  if (nv > np) return false;
  auto cross = [&](int p, int q, int r, int s) {
    if (p == r || p == s || q == r || q == s) return false;
    return ot.chi(p, q, r) != ot.chi(p, q, s) && ot.chi(r, s, p) != ot.chi(r, s, q);
  };
  const auto edges = g.edges();
  // Enumerate ordered nv-subsets via permutations of combinations.
  std::vector<int> pick(static_cast<std::size_t>(np), 0);
  std::fill(pick.begin(), pick.begin() + nv, 1);
  do {
    std::vector<int> chosen;
    for (int p = 0; p < np; ++p)
      if (pick[static_cast<std::size_t>(p)]) chosen.push_back(p);
    std::sort(chosen.begin(), chosen.end());
    do {
      bool good = true;
      for (std::size_t a = 0; a < edges.size() && good; ++a)
        for (std::size_t b = a + 1; b < edges.size() && good; ++b)
          if (cross(chosen[edges[a].first], chosen[edges[a].second], chosen[edges[b].first], chosen[edges[b].second]))
            good = false;
      if (good) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// Convex layers from coordinates: repeated monotone-chain hulls.
inline std::vector<int> hull_layer_sizes(const PointSet& ps) {
  std::vector<int> alive(ps.size());
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<int> sizes;
  auto cross = [&](int o, int a, int b) {
    const long long ax = ps[a].x - ps[o].x, ay = ps[a].y - ps[o].y;
    const long long bx = ps[b].x - ps[o].x, by = ps[b].y - ps[o].y;
    return ax * by - ay * bx;
  };
  while (!alive.empty()) {
    if (alive.size() < 3) {
      sizes.push_back(static_cast<int>(alive.size()));
      break;
    }
    auto pts = alive;
    std::sort(pts.begin(), pts.end(), [&](int a, int b) { return std::pair(ps[a].x, ps[a].y) < std::pair(ps[b].x, ps[b].y); });
    std::vector<int> h(2 * pts.size());
    std::size_t k = 0;
    for (int p : pts) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
      h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
      h[k++] = pts[i];
    }
    h.resize(k - 1);
    sizes.push_back(static_cast<int>(h.size()));
    std::vector<int> rest;
    for (int p : alive)
      if (std::find(h.begin(), h.end(), p) == h.end()) rest.push_back(p);
    alive = rest;
  }
  return sizes;
}

inline std::vector<int> hull_indices(const PointSet& ps) {
  std::vector<int> out;
  for (int p = 0; p < static_cast<int>(ps.size()); ++p) {
    // p is extreme iff no triangle of other points contains it.
    bool inside = false;
    const int n = static_cast<int>(ps.size());
    for (int a = 0; a < n && !inside; ++a)
      for (int b = a + 1; b < n && !inside; ++b)
        for (int c = b + 1; c < n && !inside; ++c) {
          if (a == p || b == p || c == p) continue;
          const int o1 = ust::orientation(ps[a], ps[b], ps[p]);
          const int o2 = ust::orientation(ps[b], ps[c], ps[p]);
          const int o3 = ust::orientation(ps[c], ps[a], ps[p]);
          if (o1 == o2 && o2 == o3) inside = true;
        }
    if (!inside) out.push_back(p);
  }
  return out;
}

// Random points in general position on a grid.
inline PointSet random_points(std::mt19937& rng, int n, int range = 1000) {
  std::uniform_int_distribution<int> d(0, range);
  while (true) {
    PointSet ps;
    for (int i = 0; i < n; ++i) ps.push_back({d(rng), d(rng)});
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        for (int c = b + 1; c < n && ok; ++c)
          if (ust::orientation(ps[a], ps[b], ps[c]) == 0) ok = false;
    if (ok) return ps;
  }
}

// Coordinate segment-crossing test (proper crossings only).
inline bool segments_cross_xy(Point p, Point q, Point r, Point s) {
  return ust::orientation(p, q, r) * ust::orientation(p, q, s) < 0 &&
         ust::orientation(r, s, p) * ust::orientation(r, s, q) < 0;
}

// Smallest set of columns hitting every row's zero set, by trying all
// subsets in order of size.
inline std::size_t min_cover_exhaustive(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  std::size_t best = cols + 1;
  for (std::uint32_t mask = 0; mask < (1u << cols); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best) continue;
    bool ok = true;
    for (const auto& r : rows) {
      bool hit = false;
      for (std::size_t j = 0; j < cols; ++j)
        if ((mask >> j & 1) && r[j] == 0) hit = true;
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Buckets graphs by brute-force isomorphism (all permutations).
inline std::size_t isomorphism_classes(const std::vector<ust::Graph>& gs) {
  std::vector<ust::Graph> reps;
  for (const auto& g : gs) {
    bool found = false;
    for (const auto& r : reps) {
      if (r.order() != g.order() || r.size() != g.size()) continue;
      std::vector<int> perm(static_cast<std::size_t>(g.order()));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool same = true;
        for (auto [u, v] : g.edges())
          if (!r.adjacent(perm[u], perm[v])) {
            same = false;
            break;
          }
        if (same) {
          found = true;
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (found) break;
    }
    if (!found) reps.push_back(g);
  }
  return reps.size();
}

}  // namespace oracle
