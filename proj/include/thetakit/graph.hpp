#ifndef THETAKIT_GRAPH_HPP_
#define THETAKIT_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace thetakit {

using Vertex = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Adjacency is stored as one
// bitset per vertex; self-loops are rejected and parallel edges collapse.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Throws OutOfRange for an endpoint >= n and InvalidArgument for a loop.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return adjacency_.empty(); }

  // Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  Vertex add_vertex();

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

  // Sorted lexicographically.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t num_edges_ = 0;
};

Graph edgeless_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

Graph complement(const Graph& g);

// Vertices of `b` are shifted up by g.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);

// Appends `b` as a fresh component; returns the id of its first vertex.
Vertex append_component(Graph& target, const Graph& b);

// Subgraph induced by `keep`, with vertices renumbered in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

bool is_independent(const Graph& g, const VertexSet& set);

// Number of neighbours of v inside `alive`.
std::size_t degree_within(const Graph& g, Vertex v, const VertexSet& alive);

// Closed neighbourhood N[v].
VertexSet closed_neighborhood(const Graph& g, Vertex v);

// Connected components of the subgraph induced by `alive`, ordered by their
// lowest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& alive);

std::vector<Vertex> to_vector(const VertexSet& set);

}  // namespace thetakit

#endif  // THETAKIT_GRAPH_HPP_
