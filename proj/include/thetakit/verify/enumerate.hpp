#ifndef THETAKIT_VERIFY_ENUMERATE_HPP_
#define THETAKIT_VERIFY_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "thetakit/election.hpp"
#include "thetakit/graph.hpp"

namespace thetakit::verify {

// Bit i of `mask` selects the i-th vertex pair in the order
// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

// Every labelled graph on n vertices (n <= 11), in increasing mask order.
void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

// G(n, 1/2).
Graph random_graph(std::size_t n, std::mt19937_64& rng);

// The first graph, ordered by vertex count and then by mask, with
// mdg < alpha. Uses only the brute-force oracles.
struct GreedyGapWitness {
  std::size_t n = 0;
  std::uint64_t mask = 0;
  Graph graph;
  std::size_t alpha = 0;
  std::size_t mdg = 0;
};
GreedyGapWitness first_greedy_gap(std::size_t max_vertices);

// One representative of every isomorphism class of trees on n >= 1
// vertices, grown leaf by leaf and deduplicated by a centre-rooted
// canonical string.
std::vector<Graph> nonisomorphic_trees(std::size_t n);

// Canonical form of a tree; equal iff isomorphic.
std::string tree_canonical_form(const Graph& tree);

// Every profile with `voters` voters over m candidates named A, B, C, ...
void for_each_profile(std::size_t m, std::size_t voters,
                      const std::function<void(const Election&)>& visit);

}  // namespace thetakit::verify

#endif  // THETAKIT_VERIFY_ENUMERATE_HPP_
