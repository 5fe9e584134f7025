#pragma once

// Abstract order types (chirotopes) of labeled points in general position:
// construction from coordinates, the small lambda matrix encoding, the
// signotope axioms, lexicographically minimal canonical labeling and the
// geometric predicates derived from triple orientations.
//
// Indices are 0-based throughout. Point 0 plays the role of the hull point
// that a natural labeling puts first.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ust/error.hpp"

namespace ust {

inline constexpr int kMinPoints = 3;
inline constexpr int kMaxPoints = 16;

struct Point {
  std::int32_t x = 0;
  std::int32_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

using PointSet = std::vector<Point>;

// Sign of the homogeneous 3x3 determinant |1 1 1; xa xb xc; ya yb yc|.
// Exact for the full 32-bit coordinate range.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  const __int128 bx = std::int64_t{b.x} - a.x, by = std::int64_t{b.y} - a.y;
  const __int128 cx = std::int64_t{c.x} - a.x, cy = std::int64_t{c.y} - a.y;
  const __int128 det = bx * cy - by * cx;
  return (det > 0) - (det < 0);
}

constexpr int binom2(int n) { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr int binom3(int n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Colex rank of i<j<k. Entries for triples inside {0..m-1} form a prefix,
// so appending a point appends orientations.
constexpr int triple_rank(int i, int j, int k) { return binom3(k) + binom2(j) + i; }

// Orientation of sorted(i,j,k) times the sign of the sorting permutation.
// Returns {i', j', k', parity}.
constexpr std::array<int, 4> sort_triple(int i, int j, int k) {
  int s = 1;
  if (i > j) { std::swap(i, j); s = -s; }
  if (j > k) { std::swap(j, k); s = -s; }
  if (i > j) { std::swap(i, j); s = -s; }
  return {i, j, k, s};
}

// Chirotope of n labeled points: a sign in {-1,+1} per unordered triple,
// extended to ordered triples by alternation. Immutable once built.
class OrderType {
 public:
  OrderType() = default;

  OrderType(int n, std::vector<std::int8_t> signs) : n_(n), signs_(std::move(signs)) {
    if (n < kMinPoints || n > kMaxPoints)
      throw OutOfRange("order type size " + std::to_string(n) + " outside [3,16]");
    if (signs_.size() != static_cast<std::size_t>(binom3(n)))
      throw DataError("orientation table has wrong length");
    for (auto s : signs_)
      if (s != 1 && s != -1) throw DataError("orientation must be +1 or -1");
  }

  int size() const { return n_; }

  int chi(int i, int j, int k) const {
    const auto t = sort_triple(i, j, k);
    return t[3] * signs_[triple_rank(t[0], t[1], t[2])];
  }

  std::span<const std::int8_t> signs() const { return signs_; }

  OrderType mirrored() const {
    auto s = signs_;
    for (auto& v : s) v = static_cast<std::int8_t>(-v);
    return OrderType(n_, std::move(s));
  }

  // New point a is old point perm[a].
  OrderType relabeled(std::span<const int> perm) const {
    std::vector<std::int8_t> s(signs_.size());
    for (int k = 2; k < n_; ++k)
      for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i)
          s[triple_rank(i, j, k)] = static_cast<std::int8_t>(chi(perm[i], perm[j], perm[k]));
    return OrderType(n_, std::move(s));
  }

  friend bool operator==(const OrderType&, const OrderType&) = default;

 private:
  int n_ = 0;
  std::vector<std::int8_t> signs_;
};

// Entries lambda(i,j) for 1 <= i < j < n in lexicographic order; the first
// row is implied by natural labeling and not stored.
struct SmallLambdaMatrix {
  int n = 0;
  std::vector<std::uint8_t> entries;

  static constexpr std::size_t record_size(int n) {
    return static_cast<std::size_t>((n - 1) * (n - 2) / 2);
  }

  static constexpr std::size_t index(int n, int i, int j) {
    // rows 1..i-1 hold n-1-r entries each
    return static_cast<std::size_t>((i - 1) * (n - 1) - (i - 1) * i / 2 + (j - i - 1));
  }

  std::uint8_t at(int i, int j) const { return entries[index(n, i, j)]; }

  friend auto operator<=>(const SmallLambdaMatrix&, const SmallLambdaMatrix&) = default;
  friend bool operator==(const SmallLambdaMatrix&, const SmallLambdaMatrix&) = default;
};

namespace detail {

// Dense n^3 sign cube for the inner loops of canonicalization.
struct SignCube {
  int n;
  std::array<std::int8_t, kMaxPoints * kMaxPoints * kMaxPoints> v{};

  explicit SignCube(const OrderType& ot) : n(ot.size()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (i != j && j != k && i != k) v[(i * kMaxPoints + j) * kMaxPoints + k] = static_cast<std::int8_t>(ot.chi(i, j, k));
  }

  int operator()(int i, int j, int k) const { return v[(i * kMaxPoints + j) * kMaxPoints + k]; }
};

}  // namespace detail

inline void require_general_position_size(std::size_t n) {
  if (n < kMinPoints || n > kMaxPoints)
    throw OutOfRange("point count " + std::to_string(n) + " outside [3,16]");
}

// lambda(i,j) for 1 <= i < j, counting points strictly right of i->j.
// Meaningful as an encoding only when ot is naturally labeled.
inline SmallLambdaMatrix lambda_matrix(const OrderType& ot) {
  const int n = ot.size();
  SmallLambdaMatrix m{n, std::vector<std::uint8_t>(SmallLambdaMatrix::record_size(n))};
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int count = 0;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && ot.chi(i, j, k) < 0) ++count;
      m.entries[SmallLambdaMatrix::index(n, i, j)] = static_cast<std::uint8_t>(count);
    }
  return m;
}

inline bool is_naturally_labeled(const OrderType& ot) {
  for (int i = 1; i < ot.size(); ++i)
    for (int j = i + 1; j < ot.size(); ++j)
      if (ot.chi(0, i, j) != 1) return false;
  return true;
}

// Rebuilds the unique naturally labeled chirotope with the given small
// lambda matrix by peeling off the first point repeatedly: with point 0 at
// the front, the row of point 1 ranks the remaining points by angle.
// Throws AxiomViolation if no such chirotope exists.
inline OrderType order_type_from_lambda(const SmallLambdaMatrix& m, std::size_t record = 0) {
  const int n = m.n;
  require_general_position_size(static_cast<std::size_t>(n));
  if (m.entries.size() != SmallLambdaMatrix::record_size(n)) throw DataError("lambda matrix has wrong length");

  std::vector<int> lam(static_cast<std::size_t>(n * n), 0);
  auto L = [&](int a, int b) -> int& { return lam[static_cast<std::size_t>(a * n + b)]; };
  for (int j = 1; j < n; ++j) {
    L(0, j) = j - 1;
    L(j, 0) = n - 2 - (j - 1);
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int v = m.at(i, j);
      if (v > n - 2) throw InvalidEntry(record, SmallLambdaMatrix::index(n, i, j), "lambda entry exceeds n-2");
      L(i, j) = v;
      L(j, i) = n - 2 - v;
    }

  std::vector<std::int8_t> signs(static_cast<std::size_t>(binom3(n)), 0);
  auto assign = [&](int a, int b, int c, int sign) {
    const auto t = sort_triple(a, b, c);
    signs[triple_rank(t[0], t[1], t[2])] = static_cast<std::int8_t>(sign * t[3]);
  };

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  for (std::size_t a = 1; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b) assign(order[0], order[a], order[b], 1);

  std::vector<int> position(static_cast<std::size_t>(n));
  while (order.size() >= 3) {
    const int head = order[1];
    std::vector<int> rest(order.begin() + 2, order.end());
    std::vector<char> seen(rest.size(), 0);
    for (int x : rest) {
      const int r = L(head, x);
      if (r < 0 || r >= static_cast<int>(rest.size()) || seen[r])
        throw AxiomViolation(record, "lambda matrix is not an order type (angular ranks are not a permutation)");
      seen[r] = 1;
    }
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t b = a + 1; b < rest.size(); ++b)
        assign(head, rest[a], rest[b], L(head, rest[a]) < L(head, rest[b]) ? 1 : -1);

    for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<int>(p);
    for (std::size_t a = 1; a < order.size(); ++a)
      for (std::size_t b = 1; b < order.size(); ++b)
        if (a != b && position[order[a]] > position[order[b]]) --L(order[a], order[b]);

    std::sort(rest.begin(), rest.end(), [&](int x, int y) { return L(head, x) < L(head, y); });
    order.assign(1, head);
    order.insert(order.end(), rest.begin(), rest.end());
  }

  OrderType ot(n, std::move(signs));
  if (lambda_matrix(ot) != m) throw AxiomViolation(record, "lambda matrix is not an order type (re-encoding differs)");
  return ot;
}

enum class Labeling { raw, canonical };

inline SmallLambdaMatrix canonical_form(const OrderType& ot);

// Orientation of every triple of the given points.
inline OrderType chirotope_from_points(const PointSet& ps, Labeling labeling = Labeling::raw) {
  const int n = static_cast<int>(ps.size());
  require_general_position_size(ps.size());
  std::vector<std::int8_t> signs(static_cast<std::size_t>(binom3(n)));
  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        const int o = orientation(ps[i], ps[j], ps[k]);
        if (o == 0)
          throw DegenerateInput(i, j, k,
                                "points " + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                    std::to_string(k + 1) + " are collinear or coincide");
        signs[triple_rank(i, j, k)] = static_cast<std::int8_t>(o);
      }
  OrderType ot(n, std::move(signs));
  if (labeling == Labeling::canonical) return order_type_from_lambda(canonical_form(ot));
  return ot;
}

// First 4-tuple i<j<k<l (lexicographic) whose orientation sequence
// chi(ijk), chi(ijl), chi(ikl), chi(jkl) changes sign more than once.
inline std::optional<std::array<int, 4>> signotope_check(const OrderType& ot) {
  const int n = ot.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const int s[4] = {ot.chi(i, j, k), ot.chi(i, j, l), ot.chi(i, k, l), ot.chi(j, k, l)};
          const int changes = (s[0] != s[1]) + (s[1] != s[2]) + (s[2] != s[3]);
          if (changes > 1) return std::array<int, 4>{i, j, k, l};
        }
  return std::nullopt;
}

// Sign change count of a 4-tuple sequence, used by the extension search.
inline bool signotope_ok(int a, int b, int c, int d) {
  return (a != b) + (b != c) + (c != d) <= 1;
}

// A relabeling that makes sign*chi naturally labeled with `first` at the
// front, or nothing if `first` is not extreme.
inline std::optional<std::vector<int>> natural_labeling(const OrderType& ot, int first, int sign) {
  const int n = ot.size();
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  perm[0] = first;
  for (int q = 0; q < n; ++q) {
    if (q == first) continue;
    int rank = 0;
    for (int k = 0; k < n; ++k)
      if (k != q && k != first && sign * ot.chi(first, q, k) < 0) ++rank;
    if (perm[1 + rank] != -1) return std::nullopt;
    perm[1 + rank] = q;
  }
  return perm;
}

// Lexicographically minimal small lambda matrix over all relabelings and
// both orientations. Only natural labelings can be minimal, so candidates are
// (extreme point, orientation) pairs.
inline SmallLambdaMatrix canonical_form(const OrderType& ot) {
  const int n = ot.size();
  const detail::SignCube cube(ot);
  const std::size_t len = SmallLambdaMatrix::record_size(n);
  std::vector<std::uint8_t> best, cur(len);
  for (int sign : {1, -1}) {
    for (int first = 0; first < n; ++first) {
      const auto perm = natural_labeling(ot, first, sign);
      if (!perm) continue;
      bool less = best.empty();
      bool abandoned = false;
      std::size_t idx = 0;
      for (int i = 1; i < n && !abandoned; ++i)
        for (int j = i + 1; j < n; ++j, ++idx) {
          const int pi = (*perm)[i], pj = (*perm)[j];
          int count = 0;
          for (int k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            if (sign * cube(pi, pj, (*perm)[k]) < 0) ++count;
          }
          cur[idx] = static_cast<std::uint8_t>(count);
          if (!less) {
            if (cur[idx] > best[idx]) { abandoned = true; break; }
            if (cur[idx] < best[idx]) less = true;
          }
        }
      if (!abandoned && less) best = cur;
    }
  }
  return SmallLambdaMatrix{n, std::move(best)};
}

// ---- binary order type files -------------------------------------------

inline std::vector<std::uint8_t> encode_olm(std::span<const SmallLambdaMatrix> ots) {
  std::vector<std::uint8_t> out;
  for (const auto& m : ots) out.insert(out.end(), m.entries.begin(), m.entries.end());
  return out;
}

// Splits a byte stream into records of (n-1)(n-2)/2 entries. With
// `validate`, every record is also materialized and checked against the
// signotope axioms.
inline std::vector<SmallLambdaMatrix> decode_olm(std::span<const std::uint8_t> bytes, int n, bool validate = false) {
  require_general_position_size(static_cast<std::size_t>(n));
  const std::size_t rs = SmallLambdaMatrix::record_size(n);
  if (bytes.size() % rs != 0)
    throw TruncatedFile("file length " + std::to_string(bytes.size()) + " is not a multiple of record size " +
                        std::to_string(rs) + " for n=" + std::to_string(n));
  std::vector<SmallLambdaMatrix> out;
  out.reserve(bytes.size() / rs);
  for (std::size_t r = 0; r * rs < bytes.size(); ++r) {
    SmallLambdaMatrix m{n, std::vector<std::uint8_t>(bytes.begin() + r * rs, bytes.begin() + (r + 1) * rs)};
    for (std::size_t e = 0; e < rs; ++e)
      if (m.entries[e] > n - 2) throw InvalidEntry(r, e, "record " + std::to_string(r) + ": lambda entry exceeds n-2");
    if (validate) {
      const auto ot = order_type_from_lambda(m, r);
      if (auto v = signotope_check(ot))
        throw AxiomViolation(r, "record " + std::to_string(r) + " violates the signotope axiom");
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Realization files of the order type database: one point set per record,
// coordinates x1 y1 ... xn yn as unsigned little-endian integers, one byte
// each for n <= 8 and two bytes each for n in 9..11.
inline std::vector<PointSet> decode_realizations(std::span<const std::uint8_t> bytes, int n) {
  if (n < kMinPoints || n > 11) throw OutOfRange("realization files exist for 3 <= n <= 11");
  const std::size_t width = n <= 8 ? 1 : 2;
  const std::size_t rs = width * 2 * static_cast<std::size_t>(n);
  if (bytes.size() % rs != 0) throw TruncatedFile("realization file length is not a multiple of record size");
  std::vector<PointSet> out;
  for (std::size_t off = 0; off < bytes.size(); off += rs) {
    PointSet ps;
    auto read = [&](std::size_t at) -> std::int32_t {
      return width == 1 ? bytes[at] : static_cast<std::int32_t>(bytes[at] | (bytes[at + 1] << 8));
    };
    for (int p = 0; p < n; ++p)
      ps.push_back({read(off + width * (2 * p)), read(off + width * (2 * p + 1))});
    out.push_back(std::move(ps));
  }
  return out;
}

// Reads every integer in the text and pairs them up, so both
// "[(214,0),(0,13)]" and "214 0\n0 13" parse.
inline PointSet parse_points(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const bool neg = text[i] == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]));
    if (neg || std::isdigit(static_cast<unsigned char>(text[i]))) {
      const std::size_t start = i;
      if (neg) ++i;
      std::int64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > (std::int64_t{1} << 31)) throw ParseError(start, "coordinate out of 32-bit range");
        ++i;
      }
      values.push_back(neg ? -v : v);
    } else {
      ++i;
    }
  }
  if (values.size() % 2 != 0) throw ParseError(text.size(), "odd number of coordinates");
  PointSet ps;
  for (std::size_t k = 0; k < values.size(); k += 2)
    ps.push_back({static_cast<std::int32_t>(values[k]), static_cast<std::int32_t>(values[k + 1])});
  return ps;
}

// ---- derived predicates -------------------------------------------------

namespace detail {

inline bool inside_triangle(const OrderType& ot, int a, int b, int c, int p) {
  const int s = ot.chi(a, b, p);
  return s == ot.chi(b, c, p) && s == ot.chi(c, a, p);
}

inline std::vector<int> extreme_among(const OrderType& ot, std::span<const int> subset) {
  std::vector<int> out;
  const std::size_t m = subset.size();
  for (std::size_t pi = 0; pi < m; ++pi) {
    const int p = subset[pi];
    bool covered = false;
    for (std::size_t a = 0; a < m && !covered; ++a)
      for (std::size_t b = a + 1; b < m && !covered; ++b)
        for (std::size_t c = b + 1; c < m && !covered; ++c) {
          if (a == pi || b == pi || c == pi) continue;
          covered = inside_triangle(ot, subset[a], subset[b], subset[c], p);
        }
    if (!covered) out.push_back(p);
  }
  return out;
}

}  // namespace detail

// Points not contained in any triangle spanned by three other points.
inline std::vector<int> extreme_points(const OrderType& ot) {
  std::vector<int> all(static_cast<std::size_t>(ot.size()));
  for (int i = 0; i < ot.size(); ++i) all[i] = i;
  return detail::extreme_among(ot, all);
}

// Sizes of the hull-peeling layers, outermost first.
inline std::vector<int> convex_layers(const OrderType& ot, std::span<const int> subset) {
  std::vector<int> rest(subset.begin(), subset.end());
  std::vector<int> sizes;
  while (!rest.empty()) {
    if (rest.size() < 3) {
      sizes.push_back(static_cast<int>(rest.size()));
      break;
    }
    const auto hull = detail::extreme_among(ot, rest);
    sizes.push_back(static_cast<int>(hull.size()));
    std::erase_if(rest, [&](int p) { return std::find(hull.begin(), hull.end(), p) != hull.end(); });
  }
  return sizes;
}

inline std::vector<int> convex_layers(const OrderType& ot) {
  std::vector<int> all(static_cast<std::size_t>(ot.size()));
  for (int i = 0; i < ot.size(); ++i) all[i] = i;
  return convex_layers(ot, all);
}

// Whether the open segments pq and rs cross. Segments sharing an endpoint
// are never passed here.
inline bool segments_cross(const OrderType& ot, int p, int q, int r, int s) {
  if (p == q || p == r || p == s || q == r || q == s || r == s)
    throw IndexOverlap("segments_cross needs four distinct points");
  return ot.chi(p, q, r) != ot.chi(p, q, s) && ot.chi(r, s, p) != ot.chi(r, s, q);
}

}  // namespace ust
