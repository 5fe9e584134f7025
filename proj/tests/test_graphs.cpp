#include <gtest/gtest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ust/data.hpp"
#include "ust/graph.hpp"
#include "ust/io.hpp"

using namespace ust;

namespace {

const char* kTri8a = "0 1 0 2 0 3 0 4 1 2 1 4 1 5 1 6 2 3 2 6 2 7 3 4 3 7 4 5 4 7 5 6 5 7 6 7";
const char* kTri8b = "0 1 0 2 0 3 0 4 1 2 1 4 1 5 2 3 2 5 2 6 2 7 3 4 3 7 4 5 4 6 4 7 5 6 6 7";

Graph octahedron() {
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
}

std::vector<Graph> bundled() {
  auto g = parse_graph_file(std::string(data::conflict_g), false);
  auto h = parse_graph_file(std::string(data::conflict_h), false);
  g.insert(g.end(), h.begin(), h.end());
  return g;
}

}  // namespace

TEST(Graphs, EdgeListRoundTrip) {
  const auto g = parse_edge_list(kTri8a);
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.size(), 18u);
  EXPECT_EQ(g.edges().front(), std::make_pair(0, 1));
  EXPECT_EQ(g.edges().back(), std::make_pair(6, 7));
  EXPECT_EQ(emit_edge_list(g), kTri8a);
  const auto lines = io::split_lines(std::string(data::conflict_g));
  const auto g1 = parse_edge_list(lines[0]);
  EXPECT_EQ(g1.size(), 27u);
  EXPECT_EQ(emit_edge_list(g1), lines[0]);
}

TEST(Graphs, EdgeListErrors) {
  EXPECT_THROW(parse_edge_list("0 1 1 0"), DuplicateEdge);
  EXPECT_THROW(parse_edge_list("0 1 2"), ParseError);
  EXPECT_THROW(parse_edge_list("0 x"), ParseError);
  EXPECT_THROW(parse_edge_list("3 3"), LoopEdge);
}

TEST(Graphs, Graph6) {
  EXPECT_EQ(emit_edge_list(parse_graph6("G|tJH{")), kTri8a);
  EXPECT_EQ(emit_edge_list(parse_graph6("G|thXs")), kTri8b);
  EXPECT_EQ(emit_edge_list(parse_graph6("D?{")), "0 4 1 4 2 4 3 4");
  EXPECT_EQ(emit_graph6(parse_graph6("G|tJH{")), "G|tJH{");
  EXPECT_EQ(emit_edge_list(parse_graph6(">>graph6<<G|thXs\n")), kTri8b);
  EXPECT_THROW(parse_graph6("G|tJ"), ParseError);
  EXPECT_THROW(parse_graph6("D?\x01"), ParseError);
}

TEST(Graphs, Graph6RoundTripRandom) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 64;
    Graph g(n);
    std::bernoulli_distribution coin(0.3);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    const auto back = parse_graph6(emit_graph6(g));
    EXPECT_EQ(back.order(), n);
    EXPECT_TRUE(back.same_edges(g));
  }
}

TEST(Graphs, TriangulationCandidates) {
  EXPECT_TRUE(is_triangulation_candidate(complete_graph(4)));
  EXPECT_FALSE(is_triangulation_candidate(complete_graph(5)));
  EXPECT_FALSE(is_triangulation_candidate(cycle_graph(6)));
  EXPECT_TRUE(is_triangulation_candidate(octahedron()));
}

TEST(Graphs, Recognition) {
  const auto k4 = recognize_stacked(complete_graph(4));
  ASSERT_TRUE(k4);
  EXPECT_TRUE(k4->steps.empty());
  EXPECT_FALSE(recognize_stacked(octahedron()));
  for (const auto& g : bundled()) {
    const auto so = recognize_stacked(g);
    ASSERT_TRUE(so) << emit_edge_list(g);
    EXPECT_TRUE(so->graph.same_edges(g.relabeled(so->original)));
    EXPECT_EQ(so->faces.size(), static_cast<std::size_t>(2 * g.order() - 4));
  }
}

TEST(Graphs, NonPlanarThreeTreeRejected) {
  // Three vertices all attached to triangle 012 of a K4: a 3-tree with the
  // right edge count, but not planar.
  Graph g = complete_graph(4);
  Graph h(6, g.edges());
  for (int v : {0, 1, 2}) h.add_edge(v, 4);
  for (int v : {0, 1, 2}) h.add_edge(v, 5);
  Graph t(7, h.edges());
  for (int v : {0, 1, 2}) t.add_edge(v, 6);
  EXPECT_TRUE(is_triangulation_candidate(t));
  EXPECT_FALSE(recognize_stacked(t));
  EXPECT_FALSE(replay_stacking({make_face(0, 1, 2), make_face(0, 1, 2)}));
}

TEST(Graphs, GenerateSmall) {
  EXPECT_EQ(generate_stacked(4).size(), 1u);
  EXPECT_EQ(generate_stacked(5).size(), 1u);
  for (int n = 6; n <= 7; ++n) {
    std::vector<Graph> labeled;
    for_each_labeled_stacking(n, [&](const Graph& g) { labeled.push_back(g); });
    EXPECT_EQ(generate_stacked(n).size(), oracle::isomorphism_classes(labeled)) << "n=" << n;
  }
}

TEST(Graphs, GenerateEleven) {
  const auto gs = generate_stacked(11);
  EXPECT_EQ(gs.size(), 434u);
  EXPECT_EQ(filter_max_degree(gs, 10, true).size(), 82u);
  for (const auto& g : gs) EXPECT_TRUE(recognize_stacked(g));
}

TEST(Graphs, LabeledCountFormula) {
  for (int n = 4; n <= 8; ++n) {
    std::size_t count = 0;
    std::set<std::vector<std::pair<int, int>>> distinct;
    for_each_labeled_stacking(n, [&](const Graph& g) {
      ++count;
      distinct.insert(g.sorted().edges());
    });
    std::size_t expect = std::size_t{1} << (n - 4);
    for (int k = 2; k <= n - 3; ++k) expect *= static_cast<std::size_t>(k);
    EXPECT_EQ(count, expect);
    EXPECT_EQ(distinct.size(), expect);
  }
}

TEST(Graphs, Degree3Faces) {
  EXPECT_TRUE(faces_all_have_degree3_vertex(complete_graph(4)));
  const auto g = parse_graph_file(std::string(data::conflict_g), false);
  EXPECT_TRUE(faces_all_have_degree3_vertex(g[9]));
  EXPECT_FALSE(faces_all_have_degree3_vertex(g[11]));
  EXPECT_THROW(faces_all_have_degree3_vertex(octahedron()), NotStacked);
}

TEST(Graphs, CanonicalLabeling) {
  std::mt19937 rng(5);
  for (const auto& g : generate_stacked(9)) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_TRUE(isomorphic(g, g.relabeled(perm)));
  }
  const auto gs = generate_stacked(8);
  for (std::size_t a = 0; a < gs.size(); ++a)
    for (std::size_t b = a + 1; b < gs.size(); ++b) EXPECT_FALSE(isomorphic(gs[a], gs[b]));
}

TEST(Graphs, TriangulationsMatchPlanarityOracle) {
  // Candidates with 3n-6 edges that pass an independent planarity test are
  // exactly the triangulations; bucket them by brute-force isomorphism.
  for (int n = 4; n <= 7; ++n) {
    std::vector<Graph> planar;
    for (const auto& g : oracle::triangulation_candidates(n)) {
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> b(static_cast<std::size_t>(n));
      for (auto [u, v] : g.edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), b);
      if (boost::boyer_myrvold_planarity_test(b)) planar.push_back(g);
    }
    EXPECT_EQ(generate_triangulations(n).size(), oracle::isomorphism_classes(planar)) << "n=" << n;
  }
}

TEST(Graphs, TriangulationCounts) {
  const std::size_t expected[] = {1, 1, 2, 5, 14, 50, 233, 1249};
  for (int n = 4; n <= 11; ++n) {
    const auto ts = generate_triangulations(n);
    EXPECT_EQ(ts.size(), expected[n - 4]) << "n=" << n;
    std::size_t stacked = 0;
    for (const auto& g : ts) {
      EXPECT_EQ(g.size(), static_cast<std::size_t>(3 * n - 6));
      stacked += recognize_stacked(g).has_value();
    }
    EXPECT_EQ(stacked, generate_stacked(n).size());
  }
}
