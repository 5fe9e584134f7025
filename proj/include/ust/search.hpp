#pragma once

// The universality search pipeline: structural prefilters for 11-point order
// types, priority-ordered universality tests, embeddability stat matrices and
// minimum conflict collections (hitting sets) over them.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ust/chirotope.hpp"
#include "ust/data.hpp"
#include "ust/embedding.hpp"
#include "ust/error.hpp"
#include "ust/graph.hpp"
#include "ust/io.hpp"
#include "ust/parallel.hpp"

namespace ust {

// ---- phase 1 -------------------------------------------------------------

// Triangular hull, and an interior point q with hull points a, b such that
// every other interior point lies inside triangle(q, a, b).
inline bool nested_triangle_property(const OrderType& ot) {
  const auto hull = extreme_points(ot);
  if (hull.size() != 3) return false;
  std::vector<int> inner;
  for (int p = 0; p < ot.size(); ++p)
    if (std::find(hull.begin(), hull.end(), p) == hull.end()) inner.push_back(p);
  for (int q : inner)
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        bool all = true;
        for (int r : inner)
          if (r != q && !detail::inside_triangle(ot, q, hull[a], hull[b], r)) {
            all = false;
            break;
          }
        if (all) return true;
      }
  return false;
}

// G_12 of the bundled collection G; it contains the layered graph every
// 11-universal set must host.
inline Graph phase1_graph() {
  const auto graphs = parse_graph_file(std::string(data::conflict_g), false);
  return graphs.at(11);
}

struct Phase1Filter {
  Graph graph = phase1_graph();  // must embed on any 11-universal set
  EmbedOptions embed;

  bool accepts(const OrderType& ot) const {
    if (ot.size() != 11) throw WrongSize("phase 1 filters order types on 11 points, got " + std::to_string(ot.size()));
    return nested_triangle_property(ot) && decide_embeddable(graph, ot, embed).has_value();
  }
};

// Indices of the order types passing both properties, in input order.
inline std::vector<std::size_t> filter_phase1(const std::vector<OrderType>& ots, const Phase1Filter& filter,
                                              unsigned workers = 1) {
  std::vector<char> keep(ots.size(), 0);
  parallel_for(ots.size(), workers, [&](std::size_t i) { keep[i] = filter.accepts(ots[i]) ? 1 : 0; });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ots.size(); ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

// ---- universality --------------------------------------------------------

// Failure tally per graph, shared across workers. It only decides the order
// in which graphs are tried.
class FailureQueue {
 public:
  explicit FailureQueue(std::size_t graphs) : counts_(std::make_unique<std::atomic<std::uint64_t>[]>(graphs)), size_(graphs) {}

  void record_failure(std::size_t graph) { counts_[graph].fetch_add(1, std::memory_order_relaxed); }

  std::uint64_t failures(std::size_t graph) const { return counts_[graph].load(std::memory_order_relaxed); }

  // Most failures first, ties in input order.
  std::vector<std::size_t> order() const {
    std::vector<std::pair<std::uint64_t, std::size_t>> v;
    for (std::size_t j = 0; j < size_; ++j) v.emplace_back(failures(j), j);
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::size_t> out;
    for (auto& e : v) out.push_back(e.second);
    return out;
  }

  std::size_t size() const { return size_; }

 private:
  std::unique_ptr<std::atomic<std::uint64_t>[]> counts_;
  std::size_t size_;
};

struct UniversalityVerdict {
  bool universal = false;
  std::size_t failed_graph = 0;  // valid when !universal
  std::size_t tested = 0;
};

// Tries graphs in queue order and stops at the first one that does not
// embed.
inline UniversalityVerdict test_universal(const OrderType& ot, const std::vector<Graph>& graphs, FailureQueue* queue,
                                          const EmbedOptions& opts = {}) {
  if (graphs.empty()) throw UsageError("test_universal needs at least one graph");
  std::vector<std::size_t> order;
  if (queue) {
    order = queue->order();
  } else {
    order.resize(graphs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  UniversalityVerdict verdict;
  for (std::size_t j : order) {
    ++verdict.tested;
    bool ok = false;
    try {
      ok = decide_embeddable(graphs[j], ot, opts).has_value();
    } catch (const SolverTimeout& e) {
      throw SolverTimeout(std::string(e.what()) + " on graph " + std::to_string(j));
    }
    if (!ok) {
      if (queue) queue->record_failure(j);
      verdict.failed_graph = j;
      return verdict;
    }
  }
  verdict.universal = true;
  return verdict;
}

// Index of the first order type on which every graph embeds, if any.
inline std::optional<std::size_t> verify_conflict_collection(const std::vector<Graph>& graphs,
                                                             const std::vector<OrderType>& ots,
                                                             const EmbedOptions& opts = {}) {
  FailureQueue queue(graphs.size());
  for (std::size_t i = 0; i < ots.size(); ++i) {
    bool fits = true;
    for (const auto& g : graphs)
      if (g.order() > ots[i].size()) fits = false;
    if (!fits) continue;
    if (test_universal(ots[i], graphs, &queue, opts).universal) return i;
  }
  return std::nullopt;
}

// ---- stat matrices -------------------------------------------------------

// bit(i, j) = graph j embeds on order type i.
class StatMatrix {
 public:
  StatMatrix() = default;
  StatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * cols_ + j] = v ? 1 : 0; }

  static StatMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    StatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DataError("stat rows differ in length");
      for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j] != 0);
    }
    return m;
  }

  friend bool operator==(const StatMatrix&, const StatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

// One line per order type, one '0'/'1' per graph.
inline std::string write_stat(const StatMatrix& m) {
  std::string out;
  out.reserve(m.rows() * (m.cols() + 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += m.at(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

inline StatMatrix read_stat(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::size_t offset = 0;
  for (const auto& line : io::split_lines(text)) {
    if (line.empty()) {
      offset += 1;
      continue;
    }
    std::vector<int> row;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] != '0' && line[k] != '1') throw ParseError(offset + k, "stat files contain only '0' and '1'");
      row.push_back(line[k] - '0');
    }
    if (!rows.empty() && row.size() != rows[0].size()) throw ParseError(offset, "stat rows differ in length");
    rows.push_back(std::move(row));
    offset += line.size() + 1;
  }
  return StatMatrix::from_rows(rows);
}

// Every (order type, graph) pair, in input order.
inline StatMatrix build_stat(const std::vector<OrderType>& ots, const std::vector<Graph>& graphs, unsigned workers = 1,
                             const EmbedOptions& opts = {}) {
  StatMatrix m(ots.size(), graphs.size());
  std::vector<std::vector<std::uint8_t>> rows(ots.size());
  parallel_for(ots.size(), workers, [&](std::size_t i) {
    rows[i].resize(graphs.size());
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      try {
        rows[i][j] = decide_embeddable(graphs[j], ots[i], opts).has_value() ? 1 : 0;
      } catch (const SolverTimeout& e) {
        throw SolverTimeout(std::string(e.what()) + " at order type " + std::to_string(i) + ", graph " + std::to_string(j));
      }
    }
  });
  for (std::size_t i = 0; i < ots.size(); ++i)
    for (std::size_t j = 0; j < graphs.size(); ++j) m.set(i, j, rows[i][j] != 0);
  return m;
}

// ---- hitting sets --------------------------------------------------------

struct ConflictCollection {
  std::vector<std::size_t> graphs;       // sorted
  std::vector<std::size_t> certificate;  // per row, a selected graph failing there
};

enum class CoverMode { greedy, exact };

namespace detail {

struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  std::size_t count_excluding(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < w.size(); ++k) c += static_cast<std::size_t>(std::popcount(w[k] & ~o.w[k]));
    return c;
  }
  void unite(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
  friend bool operator==(const Bits&, const Bits&) = default;
  friend bool operator<(const Bits& a, const Bits& b) { return a.w < b.w; }
};

// Zero sets: failing graphs per row.
inline std::vector<Bits> failing_sets(const StatMatrix& m) {
  std::vector<Bits> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Bits b(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j)) b.set(j);
    if (b.count() == 0)
      throw Infeasible(i, "order type " + std::to_string(i) + " embeds every graph; no conflict collection exists");
    rows.push_back(std::move(b));
  }
  return rows;
}

inline std::vector<std::size_t> greedy_cover(const std::vector<Bits>& rows, std::size_t cols) {
  std::vector<char> covered(rows.size(), 0);
  std::size_t left = rows.size();
  std::vector<std::size_t> chosen;
  while (left > 0) {
    std::size_t best = 0, best_hits = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (!covered[i] && rows[i].test(j)) ++hits;
      if (hits > best_hits) {
        best_hits = hits;
        best = j;
      }
    }
    chosen.push_back(best);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!covered[i] && rows[i].test(best)) {
        covered[i] = 1;
        --left;
      }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// Keeps one copy of each minimal failing set; a row whose set contains
// another row's set is hit whenever that row is.
inline std::vector<Bits> minimal_rows(std::vector<Bits> rows) {
  std::sort(rows.begin(), rows.end(), [](const Bits& a, const Bits& b) {
    const auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<Bits> kept;
  for (auto& r : rows) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.subset_of(r)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(r));
  }
  return kept;
}

class ExactCover {
 public:
  ExactCover(std::vector<Bits> rows, std::size_t cols, std::vector<std::size_t> upper)
      : rows_(std::move(rows)), cols_(cols), best_(std::move(upper)) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> open(rows_.size());
    std::iota(open.begin(), open.end(), std::size_t{0});
    std::vector<std::size_t> chosen;
    dfs(open, chosen, Bits(cols_));
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Rows with pairwise disjoint (allowed) failing sets each need their own
  // graph.
  std::size_t disjoint_bound(const std::vector<std::size_t>& open, const Bits& banned) const {
    Bits used(cols_);
    std::size_t bound = 0;
    for (std::size_t i : open) {
      Bits allowed = rows_[i];
      for (std::size_t k = 0; k < allowed.w.size(); ++k) allowed.w[k] &= ~banned.w[k];
      if (!allowed.intersects(used)) {
        used.unite(allowed);
        ++bound;
      }
    }
    return bound;
  }

  void dfs(const std::vector<std::size_t>& open, std::vector<std::size_t>& chosen, Bits banned) {
    if (open.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;
    if (chosen.size() + disjoint_bound(open, banned) >= best_.size()) return;

    std::size_t pick = open[0], pick_options = SIZE_MAX;
    for (std::size_t i : open) {
      const std::size_t opts = rows_[i].count_excluding(banned);
      if (opts == 0) return;
      if (opts < pick_options) {
        pick_options = opts;
        pick = i;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> branches;  // (-hits, column)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!rows_[pick].test(j) || banned.test(j)) continue;
      std::size_t hits = 0;
      for (std::size_t i : open)
        if (rows_[i].test(j)) ++hits;
      branches.emplace_back(hits, j);
    }
    std::stable_sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto [hits, j] : branches) {
      std::vector<std::size_t> rest;
      for (std::size_t i : open)
        if (!rows_[i].test(j)) rest.push_back(i);
      chosen.push_back(j);
      dfs(rest, chosen, banned);
      chosen.pop_back();
      banned.set(j);
    }
  }

  std::vector<Bits> rows_;
  std::size_t cols_;
  std::vector<std::size_t> best_;
};

}  // namespace detail

// Graphs such that every order type (row) fails on at least one of them.
// Exact mode is a branch and bound seeded with the greedy cover.
inline ConflictCollection min_hitting_set(const StatMatrix& m, CoverMode mode) {
  const auto rows = detail::failing_sets(m);
  ConflictCollection cc;
  if (rows.empty()) return cc;
  cc.graphs = detail::greedy_cover(rows, m.cols());
  if (mode == CoverMode::exact)
    cc.graphs = detail::ExactCover(detail::minimal_rows(rows), m.cols(), cc.graphs).run();
  for (const auto& r : rows)
    for (std::size_t j : cc.graphs)
      if (r.test(j)) {
        cc.certificate.push_back(j);
        break;
      }
  return cc;
}

// CPLEX LP format: minimize the number of chosen graphs subject to every row
// containing a chosen failing graph.
inline std::string to_lp(const StatMatrix& m) {
  const auto rows = detail::failing_sets(m);
  auto terms = [](const std::vector<std::size_t>& cols) {
    std::string out;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k > 0) out += (k % 10 == 0) ? "\n   + " : " + ";
      out += "x" + std::to_string(cols[k]);
    }
    return out;
  };
  std::vector<std::size_t> all(m.cols());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::string out = "\\ minimum conflict collection: " + std::to_string(m.rows()) + " order types, " +
                    std::to_string(m.cols()) + " graphs\nMinimize\n obj: " + terms(all) + "\nSubject To\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (rows[i].test(j)) cols.push_back(j);
    out += " r" + std::to_string(i) + ": " + terms(cols) + " >= 1\n";
  }
  out += "Binary\n";
  for (std::size_t j = 0; j < m.cols(); ++j) out += " x" + std::to_string(j) + "\n";
  out += "End\n";
  return out;
}

inline void export_lp(const StatMatrix& m, const std::filesystem::path& path) { io::write_text(path, to_lp(m)); }

}  // namespace ust
