#ifndef THETAKIT_VERIFY_ORACLES_HPP_
#define THETAKIT_VERIFY_ORACLES_HPP_

#include <cstddef>
#include <cstdint>

#include "thetakit/election.hpp"
#include "thetakit/graph.hpp"

// Brute-force reference implementations. None of these share code with the
// solvers they check; they are only practical on tiny inputs.
namespace thetakit::verify {

// Largest independent set by enumerating all 2^n subsets (n <= 24).
std::size_t brute_force_alpha(const Graph& g);

// Largest clique by enumerating all 2^n subsets (n <= 24).
std::size_t brute_force_clique(const Graph& g);

// Largest MDG output by exploring every tie-choice sequence explicitly,
// without memoization or decomposition.
std::size_t naive_mdg(const Graph& g);

// Carroll score by breadth-first search over whole profiles, where one move
// is any adjacent exchange in any voter (not only raises of c).
std::uint64_t bfs_carroll_score(const Election& e, CandidateId c);

}  // namespace thetakit::verify

#endif  // THETAKIT_VERIFY_ORACLES_HPP_
