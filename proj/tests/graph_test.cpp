#include <random>

#include "gtest/gtest.h"

#include "thetakit/error.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/independent_set.hpp"
#include "thetakit/verify/enumerate.hpp"
#include "thetakit/verify/oracles.hpp"

namespace {

using namespace thetakit;

TEST(Graph, SimpleAndSymmetric) {
  Graph g(3);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_THROW(g.add_edge(2, 2), InvalidArgument);
  EXPECT_THROW(g.add_edge(0, 3), OutOfRange);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(Graph, Builders) {
  EXPECT_EQ(complete_graph(5).num_edges(), 10u);
  EXPECT_EQ(cycle_graph(5).num_edges(), 5u);
  EXPECT_EQ(path_graph(4).num_edges(), 3u);
  EXPECT_EQ(star_graph(3).degree(0), 3u);
  EXPECT_THROW(cycle_graph(2), InvalidArgument);
  EXPECT_EQ(complement(complete_graph(4)), edgeless_graph(4));

  const auto u = disjoint_union(complete_graph(2), path_graph(3));
  EXPECT_EQ(u.num_vertices(), 5u);
  EXPECT_EQ(u.edges(), (std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}}));
  EXPECT_EQ(components(u, u.all_vertices()).size(), 2u);
}

TEST(Graph, InducedSubgraphRenumbers) {
  const auto g = cycle_graph(5);
  VertexSet keep(5);
  keep.set(1).set(2).set(4);
  const auto sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub.num_vertices(), 3u);
  EXPECT_EQ(sub.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(edgeless_graph(6)), 6u);
  EXPECT_EQ(alpha(complete_graph(6)), 1u);
  EXPECT_EQ(alpha(cycle_graph(5)), 2u);
  EXPECT_EQ(verify::brute_force_alpha(cycle_graph(5)), 2u);
  EXPECT_EQ(alpha(Graph()), 0u);
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique(complete_graph(5)), 5u);
  EXPECT_EQ(max_clique(edgeless_graph(3)), 1u);
  EXPECT_EQ(max_clique(cycle_graph(5)), 2u);
  EXPECT_EQ(verify::brute_force_clique(cycle_graph(5)), 2u);
  EXPECT_EQ(max_clique(Graph()), 0u);
}

TEST(OddMaxClique, Examples) {
  EXPECT_TRUE(odd_max_clique(complete_graph(3)));
  EXPECT_FALSE(odd_max_clique(complete_graph(4)));
  EXPECT_FALSE(odd_max_clique(cycle_graph(5)));
  EXPECT_TRUE(odd_max_clique(edgeless_graph(2)));
  EXPECT_THROW(odd_max_clique(Graph()), InvalidArgument);
}

TEST(AlphaProperties, WitnessIsIndependentAndMaximum) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 16;
    const auto g = verify::random_graph(n, rng);
    const auto set = maximum_independent_set(g);
    EXPECT_TRUE(is_independent(g, set));
    EXPECT_EQ(set.count(), verify::brute_force_alpha(g));
    EXPECT_EQ(max_clique(g), verify::brute_force_clique(g));
    EXPECT_EQ(max_clique(g), alpha(complement(g)));
  }
}

TEST(AlphaProperties, ExhaustiveUpToSixVertices) {
  for (std::size_t n = 0; n <= 6; ++n)
    verify::for_each_graph(n, [](const Graph& g) {
      ASSERT_EQ(alpha(g), verify::brute_force_alpha(g));
    });
}

TEST(AlphaProperties, DisjointUnionAdds) {
  std::vector<Graph> small;
  for (std::size_t n = 0; n <= 3; ++n) verify::for_each_graph(n, [&](const Graph& g) { small.push_back(g); });
  for (const auto& g : small)
    for (const auto& h : small)
      EXPECT_EQ(verify::brute_force_alpha(disjoint_union(g, h)), alpha(g) + alpha(h));
}

TEST(AlphaProperties, SparseGraphsWithManyVertices) {
  // Unions of cycles and paths: alpha is the sum of floor(len/2) and ceil(len/2).
  Graph g;
  std::size_t expected = 0;
  for (std::size_t len = 3; len < 30; ++len) {
    append_component(g, cycle_graph(len));
    expected += len / 2;
    append_component(g, path_graph(len));
    expected += (len + 1) / 2;
  }
  EXPECT_GT(g.num_vertices(), 700u);
  EXPECT_EQ(alpha(g), expected);
}

}  // namespace
