#include "thetakit/greedy.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "thetakit/error.hpp"
#include "thetakit/independent_set.hpp"

namespace thetakit {

namespace {

using Wide = unsigned __int128;

std::vector<Vertex> minimum_degree_vertices(const Graph& g, const VertexSet& alive) {
  std::vector<Vertex> out;
  std::size_t low = std::numeric_limits<std::size_t>::max();
  for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
    const std::size_t d = degree_within(g, static_cast<Vertex>(v), alive);
    if (d < low) {
      low = d;
      out.clear();
    }
    if (d == low) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

// MDG on a disjoint union decomposes: the restriction of any run to one
// component is a run on that component, and optimal component runs can be
// interleaved by always advancing the component holding the global minimum
// degree. So mdg(residual) is the sum over its components.
class MdgSearch {
 public:
  MdgSearch(const Graph& g, const SearchBudget& budget) : g_(g), budget_(budget) {}

  std::size_t value(const VertexSet& alive) {
    std::size_t total = 0;
    for (const auto& part : components(g_, alive)) total += connected(part);
    return total;
  }

  std::uint64_t states() const { return memo_.size(); }

 private:
  std::size_t connected(const VertexSet& part) {
    const std::size_t size = part.count();
    if (size <= 2) return 1;
    if (auto it = memo_.find(part); it != memo_.end()) return it->second;

    const auto picks = minimum_degree_vertices(g_, part);
    std::size_t best = 0;
    if (degree_within(g_, picks.front(), part) == size - 1) {
      best = 1;  // clique
    } else {
      for (Vertex v : picks) {
        best = std::max(best, 1 + value(part - closed_neighborhood(g_, v)));
        if (best == size - degree_within(g_, v, part)) break;
      }
    }

    charge();
    memo_.emplace(part, best);
    return best;
  }

  void charge() {
    if (memo_.size() >= budget_.max_states)
      throw ResourceLimit("mdg search exceeded its budget of " +
                          std::to_string(budget_.max_states) + " states");
    if (budget_.deadline && (memo_.size() & 255) == 0 &&
        std::chrono::steady_clock::now() > *budget_.deadline)
      throw ResourceLimit("mdg search exceeded its time allowance");
  }

  const Graph& g_;
  SearchBudget budget_;
  std::unordered_map<VertexSet, std::size_t> memo_;
};

}  // namespace

GreedyRun mdg_run(const Graph& g, TieRule rule) {
  GreedyRun run{VertexSet(g.num_vertices()), {}};
  VertexSet alive = g.all_vertices();
  while (alive.any()) {
    const auto candidates = minimum_degree_vertices(g, alive);
    const Vertex v = rule == TieRule::LowestId ? candidates.front() : candidates.back();
    run.chosen.set(v);
    run.trace.picks.push_back(v);
    alive -= closed_neighborhood(g, v);
  }
  return run;
}

std::optional<std::string> check_trace(const Graph& g, const GreedyTrace& trace) {
  VertexSet alive = g.all_vertices();
  for (std::size_t step = 0; step < trace.picks.size(); ++step) {
    const Vertex v = trace.picks[step];
    const std::string where = "step " + std::to_string(step) + ": vertex " + std::to_string(v);
    if (v >= g.num_vertices() || !alive.test(v)) return where + " is not in the residual graph";
    const auto low = minimum_degree_vertices(g, alive);
    if (degree_within(g, v, alive) != degree_within(g, low.front(), alive))
      return where + " does not have minimum residual degree";
    alive -= closed_neighborhood(g, v);
  }
  if (alive.any()) return std::string("residual graph not empty after the last pick");
  return std::nullopt;
}

SearchBudget SearchBudget::with_timeout(std::chrono::milliseconds timeout,
                                        std::uint64_t max_states) {
  return {max_states, std::chrono::steady_clock::now() + timeout};
}

MdgResult mdg_max(const Graph& g, const SearchBudget& budget) {
  MdgSearch search(g, budget);
  MdgResult result;
  VertexSet alive = g.all_vertices();
  result.value = search.value(alive);

  // Walk one optimal run: at each step some minimum-degree vertex keeps the
  // remaining optimum reachable.
  std::size_t remaining = result.value;
  while (alive.any()) {
    bool advanced = false;
    for (Vertex v : minimum_degree_vertices(g, alive)) {
      VertexSet next = alive - closed_neighborhood(g, v);
      if (1 + search.value(next) == remaining) {
        result.trace.picks.push_back(v);
        alive = std::move(next);
        --remaining;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw IntegrityError("mdg trace reconstruction lost the optimum");
  }
  result.states = search.states();
  return result;
}

bool mdg_geq(const Graph& g, std::size_t s, const SearchBudget& budget) {
  if (s == 0) return true;
  return mdg_max(g, budget).value >= s;
}

bool in_S_r(const Graph& g, const Rational& r, const SearchBudget& budget) {
  const Wide a = alpha(g);
  const Wide m = mdg_max(g, budget).value;
  return a * r.den() <= m * r.num();
}

bool not_in_S_r_via_k(const Graph& g, const Rational& r, const SearchBudget& budget) {
  const std::size_t a = alpha(g);
  const Wide m = mdg_max(g, budget).value;
  for (std::size_t k = 1; k <= g.num_vertices(); ++k)
    if (a >= k && m * r.num() < Wide{k} * r.den()) return true;
  return false;
}

}  // namespace thetakit
