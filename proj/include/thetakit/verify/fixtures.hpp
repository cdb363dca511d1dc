#ifndef THETAKIT_VERIFY_FIXTURES_HPP_
#define THETAKIT_VERIFY_FIXTURES_HPP_

#include "thetakit/election.hpp"

namespace thetakit::verify {

// Candidates C, D, P. Voters, most-preferred first: P C D / D P C / C D P.
// Pairwise: C beats D, P beats C, D beats P.
Election three_voter_cycle();

// Candidates C, D, P. Voters, most-preferred first:
// C P D / P C D / P D C / D P C. P is the Condorcet winner; C and D both
// score 3.
Election four_voter_example();

}  // namespace thetakit::verify

#endif  // THETAKIT_VERIFY_FIXTURES_HPP_
