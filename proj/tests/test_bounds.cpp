#include <gtest/gtest.h>

#include <cmath>

#include "ust/bounds.hpp"
#include "ust/graph.hpp"

using namespace ust;

TEST(Bounds, LabeledCount) {
  EXPECT_EQ(labeled_stacked_count(4), 1);
  EXPECT_EQ(labeled_stacked_count(5), 4);
  EXPECT_EQ(labeled_stacked_count(11), 5160960);
  EXPECT_THROW(labeled_stacked_count(3), OutOfRange);
  EXPECT_EQ(labeled_stacked_count(64).str().size(), 102u);
}

TEST(Bounds, LabeledCountMatchesEnumeration) {
  for (int n = 4; n <= 8; ++n) {
    long count = 0;
    for_each_labeled_stacking(n, [&](const Graph&) { ++count; });
    EXPECT_EQ(labeled_stacked_count(n), count) << "n=" << n;
  }
}

TEST(Bounds, CountingBound) {
  EXPECT_EQ(min_universal_size_counting(4), 4);
  EXPECT_EQ(min_universal_size_counting(15), 15);
  EXPECT_EQ(min_universal_size_counting(20), 21);
  EXPECT_EQ(min_universal_size_counting(100), 121);
  int prev = 0;
  for (int n = 4; n <= 200; ++n) {
    const int m = min_universal_size_counting(n);
    EXPECT_GE(m, n);
    EXPECT_GE(m, prev);
    prev = m;
    // m is the smallest: m - 1 fails the inequality unless m = n.
    if (m > n) {
      BigInt falling = 1;
      for (int k = 0; k < n; ++k) falling *= m - 1 - k;
      EXPECT_LT(falling, labeled_stacked_count(n));
    }
  }
}

TEST(Bounds, Alpha) {
  const double a = solve_alpha(1e-6);
  EXPECT_NEAR(a, 1.293, 0.001);
  EXPECT_NEAR(std::pow(a, a) * std::pow(a - 1, 1 - a), 2.0, 1e-5);
  EXPECT_GT(std::pow(2.0, 2.0) * std::pow(1.0, -1.0), 2.0);
  EXPECT_THROW(solve_alpha(0), UsageError);
}

TEST(Bounds, Ratio) {
  EXPECT_EQ(asymptotic_ratio(4), (Ratio{1, 1}));
  EXPECT_EQ(asymptotic_ratio(20), (Ratio{21, 20}));
  const double r10 = asymptotic_ratio(10).value(), r100 = asymptotic_ratio(100).value(),
               r1000 = asymptotic_ratio(1000).value();
  EXPECT_LE(r10, r100);
  EXPECT_LE(r100, r1000);
  EXPECT_NEAR(r1000, solve_alpha(), 0.02);
}

TEST(Bounds, Report) {
  const auto r = BoundReport::compute(11);
  EXPECT_EQ(r.labeled_count, 5160960);
  EXPECT_EQ(r.min_m, 11);
  const auto kv = r.key_values();
  EXPECT_NE(kv.find("labeled_count=5160960\n"), std::string::npos);
  EXPECT_NE(kv.find("alpha=1.293"), std::string::npos);
  EXPECT_NE(r.text().find("alpha: 1.293"), std::string::npos);
}
