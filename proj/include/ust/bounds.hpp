#pragma once

// Counting lower bound for universal point sets: there are 2^(n-4) (n-3)!
// labeled stacked triangulations on n vertices, and an m-point set can host
// at most m!/(m-n)! labeled drawings.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "ust/error.hpp"

namespace ust {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt labeled_stacked_count(int n) {
  if (n < 4) throw OutOfRange("labeled stacked triangulations need n >= 4, got " + std::to_string(n));
  BigInt r = BigInt(1) << (n - 4);
  for (int k = 2; k <= n - 3; ++k) r *= k;
  return r;
}

// Smallest m >= n with labeled_stacked_count(n) <= m!/(m-n)!.
inline int min_universal_size_counting(int n) {
  const BigInt target = labeled_stacked_count(n);
  // m!/(m-n)! = m (m-1) ... (m-n+1); moving m to m+1 multiplies by
  // (m+1)/(m+1-n).
  BigInt falling = 1;
  for (int k = 0; k < n; ++k) falling *= n - k;
  int m = n;
  while (falling < target) {
    ++m;
    falling = falling * m / (m - n);
  }
  return m;
}

// Root of a^a (a-1)^(1-a) = 2 on (1, 2].
inline double solve_alpha(double tolerance = 1e-12) {
  if (!(tolerance > 0)) throw UsageError("alpha tolerance must be positive");
  auto g = [](double a) { return a * std::log(a) + (1 - a) * std::log(a - 1) - std::log(2.0); };
  double lo = 1.0, hi = 2.0;  // g -> -ln 2 as a -> 1, g(2) = ln 2
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct Ratio {
  long num = 0;
  long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

// min_universal_size_counting(n) / n, reduced.
inline Ratio asymptotic_ratio(int n) {
  const long m = min_universal_size_counting(n);
  const long d = std::gcd(m, static_cast<long>(n));
  return {m / d, n / d};
}

struct BoundReport {
  int n = 0;
  BigInt labeled_count;
  int min_m = 0;
  double alpha = 0;
  double fs_lower = 0;  // alpha * n, up to the asymptotic o(n) term

  static BoundReport compute(int n, double alpha_tol = 1e-12) {
    BoundReport r;
    r.n = n;
    r.labeled_count = labeled_stacked_count(n);
    r.min_m = min_universal_size_counting(n);
    r.alpha = solve_alpha(alpha_tol);
    r.fs_lower = r.alpha * n;
    return r;
  }

  std::string text() const {
    char buf[64];
    std::string out = "n: " + std::to_string(n) + "\n";
    out += "labeled stacked triangulations: " + labeled_count.str() + "\n";
    out += "counting bound (smallest m): " + std::to_string(min_m) + "\n";
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(min_m) / n);
    out += "m/n: " + std::string(buf) + "\n";
    std::snprintf(buf, sizeof buf, "%.9f", alpha);
    out += "alpha: " + std::string(buf) + "\n";
    std::snprintf(buf, sizeof buf, "%.3f", fs_lower);
    out += "asymptotic f_s lower bound alpha*n (minus o(n)): " + std::string(buf) + "\n";
    return out;
  }

  std::string key_values() const {
    char buf[64];
    std::string out = "n=" + std::to_string(n) + "\nlabeled_count=" + labeled_count.str() +
                      "\nmin_m=" + std::to_string(min_m) + "\n";
    std::snprintf(buf, sizeof buf, "%.12f", alpha);
    out += "alpha=" + std::string(buf) + "\n";
    std::snprintf(buf, sizeof buf, "%.6f", fs_lower);
    out += "fs_lower=" + std::string(buf) + "\n";
    return out;
  }
};

}  // namespace ust
