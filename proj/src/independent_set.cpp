#include "thetakit/independent_set.hpp"

#include "thetakit/error.hpp"

namespace thetakit {

namespace {

class MisSearch {
 public:
  explicit MisSearch(const Graph& g) : g_(g) {}

  VertexSet solve(VertexSet alive) const {
    VertexSet taken(g_.num_vertices());

    // A vertex of degree 0 or 1 is always in some maximum independent set.
    for (bool changed = true; changed;) {
      changed = false;
      for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
        const auto u = static_cast<Vertex>(v);
        if (degree_within(g_, u, alive) <= 1) {
          taken.set(u);
          alive -= closed_neighborhood(g_, u);
          changed = true;
        }
      }
    }
    if (alive.none()) return taken;

    auto parts = components(g_, alive);
    if (parts.size() > 1) {
      for (auto& part : parts) taken |= solve(std::move(part));
      return taken;
    }

    Vertex pivot = 0;
    std::size_t best_degree = 0;
    for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
      const std::size_t d = degree_within(g_, static_cast<Vertex>(v), alive);
      if (d > best_degree) {
        best_degree = d;
        pivot = static_cast<Vertex>(v);
      }
    }

    VertexSet with = solve(alive - closed_neighborhood(g_, pivot));
    with.set(pivot);
    VertexSet rest = alive;
    rest.reset(pivot);
    // Without the pivot at most |rest| vertices remain; skip when that
    // cannot beat the branch that took it.
    if (rest.count() > with.count()) {
      VertexSet without = solve(std::move(rest));
      if (without.count() > with.count()) return taken | without;
    }
    return taken | with;
  }

 private:
  const Graph& g_;
};

}  // namespace

VertexSet maximum_independent_set(const Graph& g) {
  return MisSearch(g).solve(g.all_vertices());
}

std::size_t alpha(const Graph& g) { return maximum_independent_set(g).count(); }

VertexSet maximum_clique(const Graph& g) { return maximum_independent_set(complement(g)); }

std::size_t max_clique(const Graph& g) { return maximum_clique(g).count(); }

bool odd_max_clique(const Graph& g) {
  if (g.empty()) throw InvalidArgument("clique number parity of the empty graph");
  return max_clique(g) % 2 == 1;
}

}  // namespace thetakit
