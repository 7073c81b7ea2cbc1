#include "sfnet/graph.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "sfnet/edgelist.hpp"
#include "support.hpp"

using namespace sfnet;

namespace {

Graph path3() {
  Graph g(3);
  g.add_edge(Edge(0, 1));
  g.add_edge(Edge(1, 2));
  return g;
}

Graph star4() {
  Graph g(4);
  g.add_edge(Edge(0, 1));
  g.add_edge(Edge(0, 2));
  g.add_edge(Edge(0, 3));
  return g;
}

}  // namespace

TEST(Edge, CanonicalOrderAndSelfLoop) {
  const Edge e(5, 2);
  EXPECT_EQ(e.u, 2);
  EXPECT_EQ(e.v, 5);
  EXPECT_THROW(Edge(3, 3), SelfLoop);
  EXPECT_LT(Edge(0, 2), Edge(1, 2));
  EXPECT_LT(Edge(0, 2), Edge(0, 3));
}

TEST(Graph, AddRemoveRoundTrip) {
  Graph g = path3();
  const Graph before = g;
  g.remove_edge(Edge(0, 1));
  EXPECT_EQ(g.edge_count(), 1u);
  g.add_edge(Edge(0, 1));
  EXPECT_EQ(g, before);
}

TEST(Graph, PathPlusChordIsTriangle) {
  Graph g = path3();
  g.add_edge(Edge(0, 2));
  EXPECT_EQ(g, Graph::complete(3));
}

TEST(Graph, MutationErrors) {
  Graph k3 = Graph::complete(3);
  EXPECT_THROW(k3.add_edge(Edge(0, 1)), EdgeExists);
  Graph g = path3();
  EXPECT_THROW(g.remove_edge(Edge(0, 2)), EdgeMissing);
  EXPECT_THROW(g.add_edge(Edge(0, 7)), NodeOutOfRange);
}

TEST(Graph, SampleNonEdgeUniqueComplement) {
  const Graph g = path3();
  Rng rng(1);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(g.sample_non_edge(rng), Edge(0, 2));
}

TEST(Graph, SampleNonEdgeCompleteGraph) {
  const Graph k3 = Graph::complete(3);
  Rng rng(1);
  EXPECT_THROW(k3.sample_non_edge(rng), GraphComplete);
}

TEST(Graph, SampleNonEdgeUniformOnFourCycle) {
  Graph g(4);
  g.add_edge(Edge(0, 1));
  g.add_edge(Edge(1, 2));
  g.add_edge(Edge(2, 3));
  g.add_edge(Edge(0, 3));
  // complement is {(0,2), (1,3)}; chi-square on the two cells
  Rng rng(42);
  const int draws = 4000;
  int diag = 0;
  for (int i = 0; i < draws; ++i) {
    const Edge e = g.sample_non_edge(rng);
    ASSERT_TRUE(e == Edge(0, 2) || e == Edge(1, 3));
    if (e == Edge(0, 2)) ++diag;
  }
  const double expected = draws / 2.0;
  const double chi2 = (diag - expected) * (diag - expected) / expected +
                      (draws - diag - expected) * (draws - diag - expected) / expected;
  EXPECT_LT(chi2, 6.64);  // 1% critical value, 1 dof
}

TEST(Graph, DegreeSequences) {
  EXPECT_EQ(Graph::complete(3).degree_sequence(), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(star4().degree_sequence(), (std::vector<int>{3, 1, 1, 1}));
  EXPECT_EQ(path3().degree_sequence(), (std::vector<int>{1, 2, 1}));
}

TEST(Graph, AvgShortestPathHandValues) {
  EXPECT_DOUBLE_EQ(Graph::complete(3).avg_shortest_path().average, 1.0);
  EXPECT_NEAR(path3().avg_shortest_path().average, 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(star4().avg_shortest_path().average, 1.5, 1e-12);
}

TEST(Graph, AvgShortestPathCompleteIsOne) {
  for (int n = 2; n <= 6; ++n) {
    const auto stats = Graph::complete(n).avg_shortest_path();
    EXPECT_DOUBLE_EQ(stats.average, 1.0);
    EXPECT_EQ(stats.connected_pairs, static_cast<std::size_t>(n) * (n - 1) / 2);
  }
}

TEST(Graph, AvgShortestPathDisconnected) {
  // two disjoint edges: only 2 of the 6 pairs are connected
  Graph g(4);
  g.add_edge(Edge(0, 1));
  g.add_edge(Edge(2, 3));
  const auto stats = g.avg_shortest_path();
  EXPECT_EQ(stats.connected_pairs, 2u);
  EXPECT_DOUBLE_EQ(stats.average, 1.0);

  EXPECT_THROW(Graph(5).avg_shortest_path(), NoConnectedPairs);
}

TEST(Graph, BfsMatchesFloydWarshall) {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 5 + rng.below_int(46);
    const int max_m = n * (n - 1) / 2;
    const Graph g = testsup::random_graph(n, 1 + rng.below_int(std::max(1, max_m - 1)), rng);
    const auto d = testsup::floyd_warshall(g);
    long double total = 0.0L;
    std::size_t pairs = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (d[i][j] < testsup::kUnreached) {
          total += d[i][j];
          ++pairs;
        }
    const auto stats = g.avg_shortest_path();
    EXPECT_EQ(stats.connected_pairs, pairs);
    EXPECT_NEAR(stats.average, static_cast<double>(total / pairs), 1e-12);
  }
}

TEST(Graph, ClusteringHandValues) {
  EXPECT_DOUBLE_EQ(Graph::complete(3).avg_clustering(), 1.0);
  EXPECT_DOUBLE_EQ(star4().avg_clustering(), 0.0);
  Graph g = Graph::complete(4);
  g.remove_edge(Edge(2, 3));
  EXPECT_NEAR(g.avg_clustering(), 5.0 / 6.0, 1e-12);
}

TEST(Graph, ClusteringRangeAndCliqueComponents) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testsup::random_graph(30, 5 + rng.below_int(120), rng);
    const double c = g.avg_clustering();
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0);
  }
  // disjoint K3 and K4: every component with >= 3 nodes is a clique
  Graph g(7);
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) g.add_edge(Edge(u, v));
  for (int u = 3; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) g.add_edge(Edge(u, v));
  EXPECT_DOUBLE_EQ(g.avg_clustering(), 1.0);
}

TEST(Graph, DiagonalDistanceHandValues) {
  EXPECT_DOUBLE_EQ(Graph(4).diagonal_distance(), 0.0);
  EXPECT_NEAR(path3().diagonal_distance(), 2.0 / (std::sqrt(2.0) * 9.0), 1e-12);
  Graph g(4);
  g.add_edge(Edge(0, 3));
  EXPECT_NEAR(g.diagonal_distance(), 3.0 / (std::sqrt(2.0) * 16.0), 1e-12);
  EXPECT_NEAR(g.diagonal_distance(), 0.13258, 1e-5);
}

TEST(Graph, DiagonalDistanceReversalInvariant) {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + rng.below_int(40);
    const Graph g = testsup::random_graph(n, 1 + rng.below_int(3 * n), rng);
    std::vector<int> reversal(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) reversal[static_cast<std::size_t>(i)] = n - 1 - i;
    const Graph r = testsup::relabel(g, reversal);
    EXPECT_NEAR(g.diagonal_distance(), r.diagonal_distance(), 1e-14);
  }
}

TEST(Graph, RandomMutationSequencesKeepInvariants) {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 6 + rng.below_int(30);
    Graph g = testsup::random_graph(n, n, rng);
    for (int op = 0; op < 300; ++op) {
      if (g.edge_count() > 0 && rng.bernoulli(0.5)) {
        g.remove_edge(g.edges()[rng.below(g.edge_count())]);
      } else if (!g.is_complete()) {
        g.add_edge(g.sample_non_edge(rng));
      }
      std::size_t sum = 0;
      for (int u = 0; u < n; ++u) sum += static_cast<std::size_t>(g.degree(u));
      ASSERT_EQ(sum, 2 * g.edge_count());
    }
    ASSERT_NO_THROW(testsup::assert_graph_consistent(g));
  }
}

TEST(EdgeList, ParsesCommentsAndCollapsesDuplicates) {
  std::istringstream in(
      "# a comment\n"
      "0 1\n"
      "1 0\n"
      "\n"
      "1 2\n"
      "1 2\n"
      "  # indented comment\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g.node_count(), 3);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(EdgeList, RejectsSelfLoopWithLineNumber) {
  std::istringstream in("0 1\n3 3\n");
  try {
    read_edge_list(in);
    FAIL() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(EdgeList, RejectsMalformedLines) {
  std::istringstream bad_token("0 x\n");
  EXPECT_THROW(read_edge_list(bad_token), ParseError);
  std::istringstream negative("0 -2\n");
  EXPECT_THROW(read_edge_list(negative), ParseError);
  std::istringstream trailing("0 1 2\n");
  EXPECT_THROW(read_edge_list(trailing), ParseError);
}

TEST(EdgeList, WriteReadRoundTrip) {
  Rng rng(23);
  const Graph g = testsup::random_graph(20, 35, rng);
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  EXPECT_EQ(read_edge_list(in), g);
}

TEST(EdgeList, NodesCommentPreservesIsolatedTail) {
  Graph g(5);
  g.add_edge(Edge(0, 1));  // nodes 2..4 isolated
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  EXPECT_EQ(read_edge_list(in).node_count(), 5);
}

TEST(EdgeList, DirectedArcsKeepOrientation) {
  std::istringstream in("0 1\n1 0\n0 2\n0 2\n");
  const ArcList arcs = read_arc_list(in);
  EXPECT_EQ(arcs.n, 3);
  EXPECT_EQ(arcs.arcs.size(), 3u);  // exact duplicate collapsed, reverse kept
}
