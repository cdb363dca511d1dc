#include "thetakit/verify/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "thetakit/verify/oracles.hpp"

namespace thetakit::verify {

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n > 11) throw std::invalid_argument("exhaustive enumeration limited to 11 vertices");
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
    visit(graph_from_mask(n, mask));
}

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

GreedyGapWitness first_greedy_gap(std::size_t max_vertices) {
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      const auto mdg = naive_mdg(g);
      const auto a = brute_force_alpha(g);
      if (mdg < a) return {n, mask, std::move(g), a, mdg};
    }
  }
  throw std::runtime_error("no graph with mdg < alpha within the vertex limit");
}

namespace {

std::string rooted_form(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  const auto& nb = t.neighbors(v);
  for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
    if (u != parent) children.push_back(rooted_form(t, static_cast<Vertex>(u), v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::vector<Vertex> centres(const Graph& t) {
  const std::size_t n = t.num_vertices();
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      const auto& nb = t.neighbors(v);
      for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
        if (--degree[u] == 1) next.push_back(static_cast<Vertex>(u));
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (tree.num_vertices() == 1) return "()";
  std::string best;
  for (Vertex c : centres(tree)) {
    auto form = rooted_form(tree, c, static_cast<Vertex>(tree.num_vertices()));
    if (best.empty() || form < best) best = std::move(form);
  }
  return best;
}

std::vector<Graph> nonisomorphic_trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("trees need at least one vertex");
  std::vector<Graph> level = {Graph(1)};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Graph> grown;
    for (const auto& t : level) {
      for (Vertex v = 0; v < t.num_vertices(); ++v) {
        Graph child = t;
        const Vertex leaf = child.add_vertex();
        child.add_edge(v, leaf);
        grown.emplace(tree_canonical_form(child), std::move(child));
      }
    }
    level.clear();
    for (auto& [form, t] : grown) level.push_back(std::move(t));
  }
  return level;
}

void for_each_profile(std::size_t m, std::size_t voters,
                      const std::function<void(const Election&)>& visit) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));

  std::vector<std::vector<CandidateId>> perms;
  std::vector<CandidateId> p(m);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::size_t> odometer(voters, 0);
  while (true) {
    std::vector<PreferenceOrder> orders;
    for (std::size_t idx : odometer) orders.push_back({perms[idx]});
    visit(Election(names, std::move(orders)));

    std::size_t pos = 0;
    while (pos < voters && ++odometer[pos] == perms.size()) odometer[pos++] = 0;
    if (pos == voters) break;
  }
}

}  // namespace thetakit::verify
