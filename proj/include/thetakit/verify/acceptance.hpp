#ifndef THETAKIT_VERIFY_ACCEPTANCE_HPP_
#define THETAKIT_VERIFY_ACCEPTANCE_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace thetakit::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double time_limit = 0;  // seconds; 0 = none
};

struct AcceptanceOptions {
  std::size_t random_graphs = 200;  // 7-vertex graphs added to the exhaustive corpus
  std::size_t random_pairs = 50;    // pairs on <= 4 vertices for the reduction check
  std::uint64_t seed = 0x5eed'2026;
  std::chrono::seconds pair_budget{60};
};

// Each check runs one acceptance criterion to its exact tolerance. A
// criterion fails if any instance disagrees or the run exceeds its time
// limit.
CriterionResult check_worked_examples();          // 1
CriterionResult check_score_oracle();             // 2
CriterionResult check_mdg_oracle(const AcceptanceOptions& opts);       // 3
CriterionResult check_sr_consistency(const AcceptanceOptions& opts);   // 4
CriterionResult check_trees();                    // 5
CriterionResult check_transform();                // 6
CriterionResult check_reduction(const AcceptanceOptions& opts);        // 7
CriterionResult check_pipelines(const AcceptanceOptions& opts);        // 8
CriterionResult check_witness_replay();           // 9

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts,
    const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  [3] title (1.23 s) detail"
std::string format_result(const CriterionResult& r);

}  // namespace thetakit::verify

#endif  // THETAKIT_VERIFY_ACCEPTANCE_HPP_
