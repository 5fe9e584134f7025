#pragma once

// A small complete CDCL SAT solver: two watched literals, first-UIP clause
// learning, VSIDS-style activities with phase saving, Luby restarts.
// Literals use DIMACS conventions at the interface (+v / -v, v >= 1).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

namespace ust::sat {

enum class Result { sat, unsat, unknown };

class Solver {
 public:
  int num_vars() const { return static_cast<int>(assign_.size()); }

  int new_var() {
    assign_.push_back(0);
    level_.push_back(0);
    reason_.push_back(-1);
    activity_.push_back(0.0);
    phase_.push_back(0);
    seen_.push_back(0);
    watches_.emplace_back();
    watches_.emplace_back();
    return num_vars();
  }

  void reserve_vars(int n) {
    while (num_vars() < n) new_var();
  }

  // Returns false once the formula is known to be unsatisfiable.
  bool add_clause(std::span<const int> dimacs) {
    if (!ok_) return false;
    std::vector<int> lits;
    for (int d : dimacs) {
      const int v = std::abs(d);
      reserve_vars(v);
      lits.push_back(to_lit(d));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i)
      if (lits[i] == (lits[i - 1] ^ 1)) return true;  // tautology
    // Drop literals false at level 0, satisfied clauses vanish.
    std::vector<int> kept;
    for (int l : lits) {
      const int v = value(l);
      if (v > 0 && level_[var(l)] == 0) return true;
      if (v < 0 && level_[var(l)] == 0) continue;
      kept.push_back(l);
    }
    if (kept.empty()) return ok_ = false;
    if (kept.size() == 1) {
      enqueue(kept[0], -1);
      if (propagate() >= 0) ok_ = false;
      return ok_;
    }
    attach(std::move(kept));
    return true;
  }

  bool add_clause(std::initializer_list<int> dimacs) {
    return add_clause(std::span<const int>(dimacs.begin(), dimacs.size()));
  }

  // conflict_budget < 0 means unlimited; Result::unknown when exhausted.
  Result solve(std::int64_t conflict_budget = -1) {
    if (!ok_) return Result::unsat;
    std::int64_t restart_index = 0;
    const std::int64_t start = conflicts_;
    while (true) {
      const std::int64_t limit = 100 * luby(restart_index++);
      const Result r = search(limit, conflict_budget < 0 ? -1 : start + conflict_budget);
      if (r != Result::unknown) return r;
      if (conflict_budget >= 0 && conflicts_ - start >= conflict_budget) {
        backtrack(0);
        return Result::unknown;
      }
    }
  }

  // Value of variable v (1-based) in the last satisfying assignment.
  bool model_value(int v) const { return model_[v - 1] > 0; }

  std::int64_t conflicts() const { return conflicts_; }
  std::int64_t decisions() const { return decisions_; }

 private:
  static int to_lit(int dimacs) { return 2 * (std::abs(dimacs) - 1) + (dimacs < 0 ? 1 : 0); }
  static int var(int lit) { return lit >> 1; }

  // +1 true, -1 false, 0 unassigned.
  int value(int lit) const {
    const int a = assign_[var(lit)];
    return (lit & 1) ? -a : a;
  }

  static std::int64_t luby(std::int64_t i) {
    std::int64_t size = 1, seq = 0;
    while (size < i + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != i) {
      size = (size - 1) >> 1;
      --seq;
      i = i % size;
    }
    return std::int64_t{1} << seq;
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void enqueue(int lit, int reason) {
    const int v = var(lit);
    assign_[v] = (lit & 1) ? -1 : 1;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(lit);
  }

  int attach(std::vector<int> lits) {
    const int idx = static_cast<int>(clauses_.size());
    watches_[lits[0]].push_back(idx);
    watches_[lits[1]].push_back(idx);
    clauses_.push_back(std::move(lits));
    return idx;
  }

  // Returns the index of a conflicting clause, or -1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      const int p = trail_[qhead_++];
      const int false_lit = p ^ 1;
      auto& ws = watches_[false_lit];
      std::size_t keep = 0;
      for (std::size_t w = 0; w < ws.size(); ++w) {
        const int ci = ws[w];
        auto& c = clauses_[ci];
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (value(c[0]) > 0) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k)
          if (value(c[k]) >= 0) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back(ci);
            moved = true;
            break;
          }
        if (moved) continue;
        ws[keep++] = ci;
        if (value(c[0]) < 0) {
          for (std::size_t r = w + 1; r < ws.size(); ++r) ws[keep++] = ws[r];
          ws.resize(keep);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c[0], ci);
      }
      ws.resize(keep);
    }
    return -1;
  }

  void bump(int v) {
    activity_[v] += inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      inc_ *= 1e-100;
    }
  }

  // First-UIP learning. Returns the learnt clause with the asserting literal
  // first and the backjump level.
  std::pair<std::vector<int>, int> analyze(int confl) {
    std::vector<int> learnt{-1};
    std::vector<int> touched;
    int counter = 0;
    int p = -1;
    std::size_t index = trail_.size();
    do {
      const auto& c = clauses_[confl];
      for (std::size_t k = (p == -1 ? 0 : 1); k < c.size(); ++k) {
        const int q = c[k];
        const int v = var(q);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        touched.push_back(v);
        bump(v);
        if (level_[v] >= decision_level())
          ++counter;
        else
          learnt.push_back(q);
      }
      while (!seen_[var(trail_[--index])]) {
      }
      p = trail_[index];
      confl = reason_[var(p)];
      seen_[var(p)] = 0;
      --counter;
      // Reason clauses keep their implied literal at position 0.
    } while (counter > 0);
    learnt[0] = p ^ 1;
    for (int v : touched) seen_[v] = 0;

    int bt = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k)
        if (level_[var(learnt[k])] > level_[var(learnt[max_i])]) max_i = k;
      std::swap(learnt[1], learnt[max_i]);
      bt = level_[var(learnt[1])];
    }
    return {std::move(learnt), bt};
  }

  void backtrack(int level) {
    if (decision_level() <= level) return;
    for (std::size_t k = trail_.size(); k-- > static_cast<std::size_t>(trail_lim_[level]);) {
      const int v = var(trail_[k]);
      phase_[v] = static_cast<std::int8_t>(assign_[v]);
      assign_[v] = 0;
      reason_[v] = -1;
    }
    trail_.resize(static_cast<std::size_t>(trail_lim_[level]));
    trail_lim_.resize(static_cast<std::size_t>(level));
    qhead_ = trail_.size();
  }

  int pick_branch() const {
    int best = -1;
    double best_act = -1.0;
    for (int v = 0; v < num_vars(); ++v)
      if (assign_[v] == 0 && activity_[v] > best_act) {
        best = v;
        best_act = activity_[v];
      }
    return best;
  }

  Result search(std::int64_t restart_after, std::int64_t stop_at) {
    std::int64_t local = 0;
    while (true) {
      const int confl = propagate();
      if (confl >= 0) {
        ++conflicts_;
        ++local;
        if (decision_level() == 0) return Result::unsat;
        auto [learnt, bt] = analyze(confl);
        backtrack(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          const int lit = learnt[0];
          const int ci = attach(std::move(learnt));
          enqueue(lit, ci);
        }
        inc_ /= 0.95;
        continue;
      }
      if ((stop_at >= 0 && conflicts_ >= stop_at) || local >= restart_after) {
        backtrack(0);
        return Result::unknown;
      }
      const int v = pick_branch();
      if (v < 0) {
        model_ = assign_;
        backtrack(0);
        return Result::sat;
      }
      ++decisions_;
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      enqueue(2 * v + (phase_[v] > 0 ? 0 : 1), -1);
    }
  }

  bool ok_ = true;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::int8_t> assign_;
  std::vector<std::int8_t> model_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  std::vector<std::int8_t> phase_;
  std::vector<char> seen_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  double inc_ = 1.0;
  std::int64_t conflicts_ = 0;
  std::int64_t decisions_ = 0;
};

}  // namespace ust::sat
