#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ust/chirotope.hpp"
#include "ust/data.hpp"

using namespace ust;

namespace {

const PointSet kQuad{{0, 0}, {4, 0}, {5, 3}, {1, 4}};
const PointSet kTriangle{{0, 0}, {10, 0}, {0, 10}, {2, 3}};

std::vector<int> layers(const PointSet& ps) { return convex_layers(chirotope_from_points(ps)); }

}  // namespace

TEST(Chirotope, Orientation) {
  const auto ot = chirotope_from_points({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(ot.chi(0, 1, 2), 1);
  EXPECT_EQ(ot.chi(1, 0, 2), -1);
  EXPECT_EQ(ot.chi(2, 0, 1), 1);
}

TEST(Chirotope, CollinearIsDegenerate) {
  try {
    chirotope_from_points({{0, 0}, {1, 1}, {2, 2}});
    FAIL();
  } catch (const DegenerateInput& e) {
    EXPECT_EQ(e.triple[0], 0);
    EXPECT_EQ(e.triple[1], 1);
    EXPECT_EQ(e.triple[2], 2);
  }
}

TEST(Chirotope, SizeLimits) {
  EXPECT_THROW(chirotope_from_points({{0, 0}, {1, 0}}), OutOfRange);
  PointSet big;
  for (int i = 0; i < 17; ++i) big.push_back({i, i * i});
  EXPECT_THROW(chirotope_from_points(big), OutOfRange);
}

TEST(Chirotope, QuadrilateralLambda) {
  const auto m = lambda_matrix(chirotope_from_points(kQuad));
  EXPECT_EQ(m.entries, (std::vector<std::uint8_t>{0, 1, 0}));
  EXPECT_EQ(canonical_form(chirotope_from_points(kQuad)).entries, (std::vector<std::uint8_t>{0, 1, 0}));
}

TEST(Chirotope, CanonicalFormsOnFourAndThreePoints) {
  EXPECT_EQ(canonical_form(chirotope_from_points(kTriangle)).entries, (std::vector<std::uint8_t>{1, 0, 1}));
  EXPECT_EQ(canonical_form(chirotope_from_points({{0, 0}, {5, 1}, {2, 7}})).entries, (std::vector<std::uint8_t>{0}));
}

TEST(Chirotope, CanonicalInvariantUnderRelabeling) {
  const auto ot = chirotope_from_points(kQuad);
  std::vector<int> perm{0, 1, 2, 3};
  do {
    EXPECT_EQ(canonical_form(ot.relabeled(perm)).entries, (std::vector<std::uint8_t>{0, 1, 0}));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Chirotope, CanonicalLabelingOption) {
  const auto ot = chirotope_from_points(kTriangle, Labeling::canonical);
  EXPECT_TRUE(is_naturally_labeled(ot));
  EXPECT_EQ(lambda_matrix(ot).entries, (std::vector<std::uint8_t>{1, 0, 1}));
}

TEST(Chirotope, SignotopeCheck) {
  EXPECT_FALSE(signotope_check(OrderType(4, {1, 1, 1, 1})));
  const auto v = signotope_check(OrderType(4, {1, -1, 1, 1}));
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (std::array<int, 4>{0, 1, 2, 3}));
  EXPECT_FALSE(signotope_check(chirotope_from_points(kQuad, Labeling::canonical)));
}

TEST(Chirotope, CodecExamples) {
  const std::vector<SmallLambdaMatrix> n3{{3, {0}}};
  EXPECT_EQ(encode_olm(n3), (std::vector<std::uint8_t>{0}));
  const std::vector<SmallLambdaMatrix> n4{{4, {0, 1, 0}}, {4, {1, 0, 1}}};
  EXPECT_EQ(encode_olm(n4), (std::vector<std::uint8_t>{0, 1, 0, 1, 0, 1}));
  const std::vector<std::uint8_t> bytes{0, 1, 0, 1, 0, 1};
  const auto back = decode_olm(bytes, 4);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], n4[0]);
  EXPECT_EQ(back[1], n4[1]);
  const std::vector<std::uint8_t> seven{0, 1, 0, 1, 0, 1, 0};
  EXPECT_THROW(decode_olm(seven, 4), TruncatedFile);
}

TEST(Chirotope, CodecRejectsBadEntries) {
  const std::vector<std::uint8_t> big{0, 3, 0};
  try {
    decode_olm(big, 4);
    FAIL();
  } catch (const InvalidEntry& e) {
    EXPECT_EQ(e.record, 0u);
    EXPECT_EQ(e.offset, 1u);
  }
  // Entries in range but not the lambda matrix of any order type.
  const std::vector<std::uint8_t> bogus{1, 1, 1};
  EXPECT_THROW(decode_olm(bogus, 4, true), AxiomViolation);
}

TEST(Chirotope, LambdaRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 10;
    const auto ot = chirotope_from_points(oracle::random_points(rng, n), Labeling::canonical);
    const auto m = lambda_matrix(ot);
    EXPECT_EQ(order_type_from_lambda(m), ot);
  }
}

TEST(Chirotope, Layers) {
  EXPECT_EQ(layers(kQuad), (std::vector<int>{4}));
  EXPECT_EQ(layers(kTriangle), (std::vector<int>{3, 1}));
  const auto listing1 = parse_points(data::listing1);
  ASSERT_EQ(listing1.size(), 12u);
  EXPECT_EQ(layers(listing1), oracle::hull_layer_sizes(listing1));
  EXPECT_EQ(layers(listing1), (std::vector<int>{3, 3, 4, 2}));
}

TEST(Chirotope, SegmentsCross) {
  const auto x = chirotope_from_points({{0, 0}, {2, 2}, {0, 2}, {2, 0}});
  EXPECT_TRUE(segments_cross(x, 0, 1, 2, 3));
  const auto q = chirotope_from_points(kQuad);
  EXPECT_FALSE(segments_cross(q, 0, 1, 2, 3));
  EXPECT_FALSE(segments_cross(q, 1, 2, 3, 0));
  EXPECT_TRUE(segments_cross(q, 0, 2, 1, 3));
  EXPECT_THROW(segments_cross(q, 0, 1, 1, 2), IndexOverlap);
}

TEST(Chirotope, ParsePoints) {
  const auto ps = parse_points("[(214,0),(0,13)]");
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0].x, 214);
  EXPECT_EQ(ps[1].y, 13);
  EXPECT_THROW(parse_points("1 2 3"), ParseError);
}

// Properties over random point sets.

TEST(ChirotopeProperty, CanonicalLabelingSatisfiesSignotopeAxiom) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 9;
    const auto ot = chirotope_from_points(oracle::random_points(rng, n), Labeling::canonical);
    EXPECT_FALSE(signotope_check(ot)) << "n=" << n;
  }
}

TEST(ChirotopeProperty, CrossingMatchesCoordinates) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ps = oracle::random_points(rng, 6);
    const auto ot = chirotope_from_points(ps);
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q)
        for (int r = 0; r < 6; ++r)
          for (int s = 0; s < 6; ++s) {
            if (p == q || p == r || p == s || q == r || q == s || r == s) continue;
            ASSERT_EQ(segments_cross(ot, p, q, r, s), oracle::segments_cross_xy(ps[p], ps[q], ps[r], ps[s]));
          }
  }
}

TEST(ChirotopeProperty, ExtremePointsMatchGeometry) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ps = oracle::random_points(rng, 4 + trial % 8, 60);
    const auto ot = chirotope_from_points(ps);
    EXPECT_EQ(extreme_points(ot), oracle::hull_indices(ps));
    EXPECT_EQ(convex_layers(ot), oracle::hull_layer_sizes(ps));
  }
}

TEST(ChirotopeProperty, CanonicalFormIsInvariant) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 7;
    const auto ot = chirotope_from_points(oracle::random_points(rng, n));
    const auto c = canonical_form(ot);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(ot.relabeled(perm)), c);
    EXPECT_EQ(canonical_form(ot.mirrored()), c);
    // Idempotent: decoding the canonical matrix gives the same class back.
    EXPECT_EQ(canonical_form(order_type_from_lambda(c)), c);
  }
}
