#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "ust/enumeration.hpp"
#include "ust/io.hpp"

using namespace ust;
namespace fs = std::filesystem;

namespace {

std::vector<SmallLambdaMatrix> level(int n) {
  std::vector<SmallLambdaMatrix> cur{{3, {0}}};
  for (int k = 3; k < n; ++k) {
    std::set<std::vector<std::uint8_t>> next;
    for (const auto& m : cur)
      for (auto& e : extend_by_one(order_type_from_lambda(m))) next.insert(e.entries);
    cur.clear();
    for (const auto& e : next) cur.push_back({k + 1, e});
  }
  return cur;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "ust_enum_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST(Enumeration, ExtendSeed) {
  const auto out = extend_by_one(order_type_from_lambda({3, {0}}));
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(encode_olm(out), (std::vector<std::uint8_t>{0, 1, 0, 1, 0, 1}));
}

TEST(Enumeration, CountsMatchOracle) {
  const std::size_t expected[] = {0, 0, 0, 0, 2, 3, 16, 135};
  for (int n = 4; n <= 7; ++n) {
    const auto mine = level(n);
    const auto ref = oracle::all_order_types(n);
    EXPECT_EQ(ref.size(), expected[n]) << "oracle n=" << n;
    ASSERT_EQ(mine.size(), ref.size()) << "n=" << n;
    std::size_t k = 0;
    for (const auto& r : ref) EXPECT_EQ(mine[k++].entries, r);
  }
}

TEST(Enumeration, OutputsAreCanonicalAndValid) {
  for (const auto& m : level(6)) {
    const auto ot = order_type_from_lambda(m);
    EXPECT_EQ(canonical_form(ot), m);
    EXPECT_FALSE(signotope_check(ot));
  }
}

TEST(Enumeration, ExtensionsContainTheParent) {
  // Some one-point deletion of every extension gives back the input class.
  for (const auto& parent : level(5)) {
    const auto ot = order_type_from_lambda(parent);
    for (const auto& child : extend_by_one(ot)) {
      const auto c = order_type_from_lambda(child);
      bool found = false;
      for (int drop = 0; drop < c.size() && !found; ++drop) {
        std::vector<std::int8_t> s;
        std::vector<int> keep;
        for (int p = 0; p < c.size(); ++p)
          if (p != drop) keep.push_back(p);
        const int m = static_cast<int>(keep.size());
        s.assign(static_cast<std::size_t>(binom3(m)), 0);
        for (int k = 2; k < m; ++k)
          for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) s[triple_rank(i, j, k)] = static_cast<std::int8_t>(c.chi(keep[i], keep[j], keep[k]));
        found = canonical_form(OrderType(m, s)) == parent;
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(Enumeration, RunExtensionTranscriptAndFile) {
  const auto in = scratch("n3.bin");
  io::write_bytes(in, std::vector<std::uint8_t>{0});
  ExtensionShard shard{1, 0, 1, in, scratch("n3.out")};
  std::ostringstream log;
  const auto rep = run_extension(shard, 3, false, &log);
  EXPECT_EQ(rep.processed, 1u);
  EXPECT_EQ(rep.produced, 2u);
  EXPECT_EQ(io::read_bytes(shard.output), (std::vector<std::uint8_t>{0, 1, 0, 1, 0, 1}));
  EXPECT_NE(log.str().find("total solutions: 2/1"), std::string::npos);
  EXPECT_THROW(run_extension(shard, 3, false), UsageError);
  EXPECT_NO_THROW(run_extension(shard, 3, true));
}

TEST(Enumeration, ShardsMergeToSingleRun) {
  const auto in = scratch("n5.bin");
  io::write_bytes(in, encode_olm(level(5)));
  const auto whole = scratch("whole.bin");
  run_extension({1, 0, 1, in, whole}, 5);
  std::vector<fs::path> parts;
  for (int p = 0; p < 3; ++p) {
    parts.push_back(scratch("part" + std::to_string(p) + ".bin"));
    run_extension({3, p, p + 1, in, parts.back()}, 5);
  }
  const auto merged = scratch("merged.bin");
  EXPECT_EQ(merge_dedup(6, parts, merged), 16u);
  EXPECT_EQ(io::read_bytes(merged), io::read_bytes(whole));
}

TEST(Enumeration, ShardValidation) {
  EXPECT_THROW((ExtensionShard{2, 1, 1, "", ""}.validate()), UsageError);
  EXPECT_THROW((ExtensionShard{2, 0, 3, "", ""}.validate()), UsageError);
  EXPECT_EQ(ExtensionShard::default_output("x.bin", 0, 2).string(), "x.bin.ext0_2.bin");
}
