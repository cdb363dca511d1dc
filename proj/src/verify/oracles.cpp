#include "thetakit/verify/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace thetakit::verify {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  if (g.num_vertices() > 24) throw std::invalid_argument("brute force limited to 24 vertices");
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

std::size_t best_subset(const std::vector<std::uint32_t>& adj, bool want_clique) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (!(set >> v & 1)) continue;
      const std::uint32_t others = set & ~(1u << v);
      ok = want_clique ? (adj[v] & others) == others : (adj[v] & set) == 0;
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(set)));
  }
  return best;
}

std::size_t naive_mdg_from(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
  if (alive == 0) return 0;
  int low = 64;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (alive >> v & 1) low = std::min(low, __builtin_popcount(adj[v] & alive));
  std::size_t best = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!(alive >> v & 1) || __builtin_popcount(adj[v] & alive) != low) continue;
    const std::uint32_t rest = alive & ~adj[v] & ~(1u << v);
    best = std::max(best, 1 + naive_mdg_from(adj, rest));
  }
  return best;
}

using Profile = std::vector<std::vector<CandidateId>>;

bool is_condorcet(const Profile& p, CandidateId c, std::size_t m) {
  for (CandidateId d = 0; d < m; ++d) {
    if (d == c) continue;
    std::size_t wins = 0;
    for (const auto& r : p) {
      const auto pc = std::find(r.begin(), r.end(), c) - r.begin();
      const auto pd = std::find(r.begin(), r.end(), d) - r.begin();
      wins += pc < pd ? 1 : 0;
    }
    if (2 * wins <= p.size()) return false;
  }
  return true;
}

}  // namespace

std::size_t brute_force_alpha(const Graph& g) { return best_subset(adjacency_masks(g), false); }

std::size_t brute_force_clique(const Graph& g) { return best_subset(adjacency_masks(g), true); }

std::size_t naive_mdg(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::uint32_t all = g.num_vertices() == 0 ? 0 : (1u << g.num_vertices()) - 1;
  return naive_mdg_from(adj, all);
}

std::uint64_t bfs_carroll_score(const Election& e, CandidateId c) {
  const std::size_t m = e.num_candidates();
  Profile start;
  for (const auto& v : e.voters()) start.push_back(v.ranking);

  std::map<Profile, std::uint64_t> dist{{start, 0}};
  std::deque<Profile> queue{start};
  while (!queue.empty()) {
    Profile p = queue.front();
    queue.pop_front();
    const std::uint64_t d = dist[p];
    if (is_condorcet(p, c, m)) return d;
    for (std::size_t v = 0; v < p.size(); ++v) {
      for (std::size_t i = 0; i + 1 < m; ++i) {
        Profile next = p;
        std::swap(next[v][i], next[v][i + 1]);
        if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
      }
    }
  }
  throw std::logic_error("profile space exhausted without a Condorcet winner");
}

}  // namespace thetakit::verify
