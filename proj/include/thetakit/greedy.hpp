#ifndef THETAKIT_GREEDY_HPP_
#define THETAKIT_GREEDY_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/rational.hpp"

namespace thetakit {

// Minimum Degree Greedy: repeatedly pick a vertex of minimum degree in the
// residual graph, keep it, and delete it together with its neighbours.

enum class TieRule { LowestId, HighestId };

struct GreedyTrace {
  std::vector<Vertex> picks;  // in selection order
};

struct GreedyRun {
  VertexSet chosen;
  GreedyTrace trace;
};

GreedyRun mdg_run(const Graph& g, TieRule rule = TieRule::LowestId);

// Replays a trace against g. Returns a description of the first violated
// step (pick not alive, pick not of minimum residual degree, residual not
// empty at the end), or nothing when the trace is a valid MDG run.
std::optional<std::string> check_trace(const Graph& g, const GreedyTrace& trace);

// Limits for the exact mdg search. Exceeding either raises ResourceLimit.
struct SearchBudget {
  std::uint64_t max_states = 2'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static SearchBudget with_timeout(std::chrono::milliseconds timeout,
                                   std::uint64_t max_states = 2'000'000);
};

struct MdgResult {
  std::size_t value = 0;
  GreedyTrace trace;          // an optimal run
  std::uint64_t states = 0;   // memo entries created
};

// mdg(G): the largest MDG output over all tie-breaking choices. Memoized
// depth-first search over connected residual vertex sets.
MdgResult mdg_max(const Graph& g, const SearchBudget& budget = {});

// Some run of MDG outputs at least s vertices.
bool mdg_geq(const Graph& g, std::size_t s, const SearchBudget& budget = {});

// alpha(G) / r <= mdg(G), decided as alpha * den <= mdg * num.
bool in_S_r(const Graph& g, const Rational& r, const SearchBudget& budget = {});

// Complement test: some k in [1, n] has alpha(G) >= k and mdg(G) < k / r.
bool not_in_S_r_via_k(const Graph& g, const Rational& r, const SearchBudget& budget = {});

}  // namespace thetakit

#endif  // THETAKIT_GREEDY_HPP_
