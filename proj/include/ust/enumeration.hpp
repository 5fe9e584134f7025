#pragma once

// Enumeration of abstract order types on n+1 points from those on n points.
//
// Every order type X on n+1 points arises as follows: take a hull vertex q of
// X and a hull neighbour p. In the natural labeling of X (or of its mirror
// image) around p, q comes last. Dropping q leaves a natural labeling of
// X\q, which is one of the natural labelings of the canonical representative
// of X\q. So extending every natural labeling of every input order type by a
// last point (orientation +1 with point 0) reaches every class.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "ust/chirotope.hpp"
#include "ust/error.hpp"
#include "ust/io.hpp"

namespace ust {

namespace detail {

struct BytesHash {
  std::size_t operator()(const std::vector<std::uint8_t>& v) const {
    return static_cast<std::size_t>(io::fnv1a(v));
  }
};

using RecordSet = std::unordered_set<std::vector<std::uint8_t>, BytesHash>;

// Backtracks over the orientations (i, j, new) for 1 <= i < j < n in
// lexicographic pair order. Completed chirotopes go to `sink`.
template <typename Sink>
void extend_natural(const OrderType& base, Sink&& sink) {
  const int n = base.size();
  const int m = n + 1;
  std::vector<std::int8_t> signs(static_cast<std::size_t>(binom3(m)), 0);
  std::copy(base.signs().begin(), base.signs().end(), signs.begin());
  auto sorted_chi = [&](int i, int j, int k) { return signs[triple_rank(i, j, k)]; };
  auto slot = [&](int i, int j) -> std::int8_t& { return signs[triple_rank(i, j, n)]; };
  for (int j = 1; j < n; ++j) slot(0, j) = 1;

  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  auto consistent = [&](int b, int c) {
    for (int a = 0; a < b; ++a)
      if (!signotope_ok(sorted_chi(a, b, c), sorted_chi(a, b, n), sorted_chi(a, c, n), sorted_chi(b, c, n)))
        return false;
    return true;
  };

  // Iterative DFS; sign +1 is tried before -1 at every pair.
  const std::size_t depth = pairs.size();
  std::vector<int> choice(depth, 0);
  std::size_t d = 0;
  if (depth == 0) {
    sink(OrderType(m, signs));
    return;
  }
  while (true) {
    if (choice[d] == 2) {
      choice[d] = 0;
      if (d == 0) return;
      --d;
      continue;
    }
    const auto [b, c] = pairs[d];
    slot(b, c) = static_cast<std::int8_t>(choice[d] == 0 ? 1 : -1);
    ++choice[d];
    if (!consistent(b, c)) continue;
    if (d + 1 == depth) {
      sink(OrderType(m, signs));
      continue;
    }
    ++d;
  }
}

inline std::vector<OrderType> natural_relabelings(const OrderType& ot) {
  std::vector<OrderType> out;
  std::set<std::vector<std::int8_t>> seen;
  for (int sign : {1, -1}) {
    const OrderType oriented = sign == 1 ? ot : ot.mirrored();
    for (int first = 0; first < ot.size(); ++first) {
      auto perm = natural_labeling(ot, first, sign);
      if (!perm) continue;
      OrderType relabeled = oriented.relabeled(*perm);
      std::vector<std::int8_t> key(relabeled.signs().begin(), relabeled.signs().end());
      if (seen.insert(key).second) out.push_back(std::move(relabeled));
    }
  }
  return out;
}

inline void extend_into(const OrderType& ot, RecordSet& out) {
  for (const auto& base : natural_relabelings(ot))
    extend_natural(base, [&](const OrderType& ext) { out.insert(canonical_form(ext).entries); });
}

inline std::vector<SmallLambdaMatrix> sorted_records(const RecordSet& set, int n) {
  std::vector<std::vector<std::uint8_t>> v(set.begin(), set.end());
  std::sort(v.begin(), v.end());
  std::vector<SmallLambdaMatrix> out;
  out.reserve(v.size());
  for (auto& e : v) out.push_back({n, std::move(e)});
  return out;
}

}  // namespace detail

// All order types on n+1 points containing ot, as sorted canonical records.
inline std::vector<SmallLambdaMatrix> extend_by_one(const OrderType& ot) {
  if (ot.size() + 1 > kMaxPoints) throw OutOfRange("cannot extend beyond 16 points");
  detail::RecordSet set;
  detail::extend_into(ot, set);
  return detail::sorted_records(set, ot.size() + 1);
}

// Records are assigned to parts by index mod parts; one run handles parts
// [from_part, to_part), one thread each.
struct ExtensionShard {
  int parts = 1;
  int from_part = 0;
  int to_part = 1;
  std::filesystem::path input;
  std::filesystem::path output;

  void validate() const {
    if (parts < 1 || from_part < 0 || from_part >= to_part || to_part > parts)
      throw UsageError("shard range must satisfy 0 <= from < to <= parts");
  }

  static std::filesystem::path default_output(const std::filesystem::path& input, int from, int to) {
    return input.string() + ".ext" + std::to_string(from) + "_" + std::to_string(to) + ".bin";
  }
};

struct ExtensionReport {
  std::size_t processed = 0;
  std::size_t produced = 0;
};

inline ExtensionReport run_extension(const ExtensionShard& shard, int n, bool force = false,
                                     std::ostream* log = nullptr) {
  shard.validate();
  if (n + 1 > kMaxPoints) throw OutOfRange("cannot extend beyond 16 points");
  if (!force && std::filesystem::exists(shard.output))
    throw UsageError("output " + shard.output.string() + " exists (use --force to overwrite)");
  const auto bytes = io::read_bytes(shard.input);
  const auto records = decode_olm(bytes, n);

  const int threads = shard.to_part - shard.from_part;
  std::vector<detail::RecordSet> found(static_cast<std::size_t>(threads));
  std::vector<std::size_t> processed(static_cast<std::size_t>(threads), 0);
  std::mutex log_mutex;
  auto say = [&](const std::string& line) {
    if (!log) return;
    std::lock_guard lock(log_mutex);
    *log << line << '\n';
  };
  say("n: " + std::to_string(n));
  say("starting threads: " + std::to_string(threads));

  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const int part = shard.from_part + t;
      const std::string tag = "[" + std::to_string(part) + "/" + std::to_string(shard.parts) + "]";
      say(tag + " started");
      try {
        for (std::size_t r = static_cast<std::size_t>(part); r < records.size(); r += static_cast<std::size_t>(shard.parts)) {
          const auto ot = order_type_from_lambda(records[r], r);
          const std::size_t before = found[t].size();
          detail::extend_into(ot, found[t]);
          say(tag + " n " + std::to_string(n) + "\tct " + std::to_string(processed[t]) + "\textensions " +
              std::to_string(found[t].size() - before));
          ++processed[t];
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
      say(tag + " finished");
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  detail::RecordSet all;
  ExtensionReport report;
  for (int t = 0; t < threads; ++t) {
    all.insert(found[t].begin(), found[t].end());
    report.processed += processed[t];
  }
  const auto out = detail::sorted_records(all, n + 1);
  report.produced = out.size();
  io::write_bytes(shard.output, encode_olm(out));
  say("all threads done.");
  say("total solutions: " + std::to_string(report.produced) + "/" + std::to_string(report.processed));
  return report;
}

// Union of several record files, sorted and without duplicates.
inline std::size_t merge_dedup(int n, const std::vector<std::filesystem::path>& inputs,
                               const std::filesystem::path& output, bool force = false) {
  if (!force && std::filesystem::exists(output))
    throw UsageError("output " + output.string() + " exists (use --force to overwrite)");
  std::vector<std::vector<std::uint8_t>> all;
  for (const auto& path : inputs)
    for (auto& m : decode_olm(io::read_bytes(path), n)) all.push_back(std::move(m.entries));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<std::uint8_t> bytes;
  for (const auto& r : all) bytes.insert(bytes.end(), r.begin(), r.end());
  io::write_bytes(output, bytes);
  return all.size();
}

}  // namespace ust
