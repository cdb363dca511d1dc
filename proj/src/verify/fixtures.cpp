#include "thetakit/verify/fixtures.hpp"

namespace thetakit::verify {

Election three_voter_cycle() {
  return Election::from_names({"C", "D", "P"}, {{"P", "C", "D"}, {"D", "P", "C"}, {"C", "D", "P"}});
}

Election four_voter_example() {
  return Election::from_names(
      {"C", "D", "P"},
      {{"C", "P", "D"}, {"P", "C", "D"}, {"P", "D", "C"}, {"D", "P", "C"}});
}

}  // namespace thetakit::verify
