#include "thetakit/graph.hpp"

#include <string>

#include "thetakit/error.hpp"

namespace thetakit {

Graph::Graph(std::size_t n) : adjacency_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  const std::size_t n = num_vertices();
  if (u >= n || v >= n)
    throw OutOfRange("edge " + std::to_string(u) + "-" + std::to_string(v) +
                     " outside a graph on " + std::to_string(n) + " vertices");
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].test(v)) return false;
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  ++num_edges_;
  return true;
}

Vertex Graph::add_vertex() {
  for (auto& row : adjacency_) row.push_back(false);
  adjacency_.emplace_back(adjacency_.size() + 1);
  return static_cast<Vertex>(adjacency_.size() - 1);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (auto v = adjacency_[u].find_next(u); v != VertexSet::npos;
         v = adjacency_[u].find_next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

VertexSet Graph::all_vertices() const {
  VertexSet all(num_vertices());
  all.set();
  return all;
}

Graph edgeless_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Vertex append_component(Graph& target, const Graph& b) {
  const auto offset = static_cast<Vertex>(target.num_vertices());
  for (std::size_t i = 0; i < b.num_vertices(); ++i) target.add_vertex();
  for (const auto& [u, v] : b.edges()) target.add_edge(u + offset, v + offset);
  return offset;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out = a;
  append_component(out, b);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> index(g.num_vertices(), 0);
  std::vector<Vertex> kept = to_vector(keep);
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<Vertex>(i);
  Graph out(kept.size());
  for (const auto& [u, v] : g.edges())
    if (keep.test(u) && keep.test(v)) out.add_edge(index[u], index[v]);
  return out;
}

bool is_independent(const Graph& g, const VertexSet& set) {
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
    if (g.neighbors(static_cast<Vertex>(v)).intersects(set)) return false;
  return true;
}

std::size_t degree_within(const Graph& g, Vertex v, const VertexSet& alive) {
  return (g.neighbors(v) & alive).count();
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out = g.neighbors(v);
  out.set(v);
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& alive) {
  std::vector<VertexSet> out;
  VertexSet unseen = alive;
  for (auto start = unseen.find_first(); start != VertexSet::npos;
       start = unseen.find_first()) {
    VertexSet comp(alive.size());
    VertexSet frontier(alive.size());
    frontier.set(start);
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(alive.size());
      for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v))
        next |= g.neighbors(static_cast<Vertex>(v));
      next &= alive;
      next -= comp;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Vertex> to_vector(const VertexSet& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
    out.push_back(static_cast<Vertex>(v));
  return out;
}

}  // namespace thetakit
